#include "uoslice/classify.hpp"
#include "uoslice/commands.hpp"
#include "uoslice/federation.hpp"
#include "uoslice/orchestrator.hpp"
#include "uoslice/scenario.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

namespace {

using namespace uoslice;

// A mixed network with one peered MNO, `tenants` private tenants and one
// planned slice per tenant; every fourth tenant asks for wide-area service
// and another quarter for an exclusive slice.
NetworkPlan grown_plan(int tenants) {
    NetworkPlan plan;
    add_domain(plan, {DomainId("uo"), DomainKind::MicroOperator, ""});
    add_domain(plan, {DomainId("mno"), DomainKind::Mno, ""});
    Nssi core;
    core.id = NssiId("mno-core");
    core.kind = SubnetKind::CN;
    core.owner = DomainId("mno");
    core.capacity = 1'000'000;
    add_nssi(plan, core);
    PeeringAgreement a;
    a.mno = DomainId("mno");
    a.direction = PeeringDirection::MicroOperatorUsesMno;
    a.exported_nssis.insert(core.id);
    plan = register_peer(plan, a);

    for (int i = 0; i < tenants; ++i) {
        Tenant t;
        t.id = TenantId("t" + std::to_string(i));
        t.locations = {"site"};
        t.external_connectivity_need = i % 4 == 0;
        add_tenant(plan, t);
    }
    for (int i = 0; i < tenants; ++i) {
        ServiceRequest r;
        r.id = RequestId("r" + std::to_string(i));
        r.tenant = TenantId("t" + std::to_string(i));
        r.demand = 1 + i % 3;
        r.locations = {"site"};
        r.wide_area = i % 4 == 0;
        if (i % 4 == 2) r.isolation = IsolationClass::Exclusive;
        const auto s = in_context(ScenarioKind::MixedOptionA, false, plan);
        plan = instantiate(plan, plan_nsi(plan, translate_service(r, s), s, {64}), ManagementMode::Request);
    }
    return plan;
}

void BM_ClassifyAll(benchmark::State& state) {
    const auto plan = grown_plan(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& [id, nsi] : plan.nsis) benchmark::DoNotOptimize(classify(plan, id));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(plan.nsis.size()));
}
BENCHMARK(BM_ClassifyAll)->RangeMultiplier(4)->Range(4, 64);

void BM_Validate(benchmark::State& state) {
    const auto plan = grown_plan(static_cast<int>(state.range(0)));
    const auto s = in_context(ScenarioKind::MixedOptionA, false, plan);
    for (auto _ : state) benchmark::DoNotOptimize(validate_network_plan(plan, s));
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(4, 64);

void BM_PlanNsi(benchmark::State& state) {
    auto plan = grown_plan(static_cast<int>(state.range(0)));
    Tenant t;
    t.id = TenantId("newcomer");
    t.locations = {"site"};
    add_tenant(plan, t);
    ServiceRequest r;
    r.id = RequestId("new");
    r.tenant = t.id;
    r.demand = 2;
    r.locations = {"site"};
    const auto s = in_context(ScenarioKind::MixedOptionA, false, plan);
    const auto req = translate_service(r, s);
    for (auto _ : state) benchmark::DoNotOptimize(plan_nsi(plan, req, s, {64}));
}
BENCHMARK(BM_PlanNsi)->RangeMultiplier(4)->Range(4, 64);

void BM_ValidateCommand(benchmark::State& state) {
    std::ifstream in(std::string(UOSLICE_CORPUS_DIR) + "/fig8_mixed_option_a.json");
    std::ostringstream text;
    text << in.rdbuf();
    const auto doc = text.str();
    for (auto _ : state) benchmark::DoNotOptimize(run_validate(doc, OutputFormat::Text));
}
BENCHMARK(BM_ValidateCommand);

} // namespace

BENCHMARK_MAIN();
