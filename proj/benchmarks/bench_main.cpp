#include <benchmark/benchmark.h>

#include "synorder/algebra.hpp"
#include "synorder/logic.hpp"
#include "synorder/oracle.hpp"
#include "synorder/order_type.hpp"
#include "synorder/structured.hpp"

using namespace synorder;

namespace {

SyncAutomaton omega_order() {
  return natural_order_on(UPSet::naturals(), Direction::Ascending);
}

SyncAutomaton evenodd() {
  SyncAutomaton a(2);
  int odd = a.add_state(false);
  int fin = a.add_state(true);
  a.add_transition(0, 3, odd);
  a.add_transition(odd, 3, 0);
  a.add_transition(0, 2, fin);
  return a;
}

void BM_product_union(benchmark::State& state) {
  SyncAutomaton w = omega_order();
  SyncAutomaton e = evenodd();
  for (auto _ : state)
    benchmark::DoNotOptimize(product(w, e, BoolOp::Union));
}
BENCHMARK(BM_product_union);

void BM_normalize(benchmark::State& state) {
  StructuredBinary s = to_structured(evenodd());
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_normalize);

void BM_order_type_sum(benchmark::State& state) {
  SyncAutomaton mix = sum_disjoint(scale(omega_order(), 2, 0),
                                   scale(inverse(omega_order()), 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(order_type(mix));
}
BENCHMARK(BM_order_type_sum);

void BM_compile_formula(benchmark::State& state) {
  std::map<std::string, UPSet> sets{{"EV", UPSet::residue_class(0, 2, 0)},
                                    {"POS", UPSet::positives()}};
  Formula f =
      parse_formula("x - 0 IN EV AND y - 0 IN EV AND y - x IN POS", sets);
  for (auto _ : state) benchmark::DoNotOptimize(compile_formula(f));
}
BENCHMARK(BM_compile_formula);

void BM_pair_table(benchmark::State& state) {
  SyncAutomaton w = omega_order();
  for (auto _ : state)
    benchmark::DoNotOptimize(pair_table(w, state.range(0)));
}
BENCHMARK(BM_pair_table)->Arg(150)->Arg(600);

}  // namespace

BENCHMARK_MAIN();
