#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "orbigraph/character.hpp"
#include "orbigraph/correspondence.hpp"
#include "orbigraph/dr.hpp"
#include "orbigraph/fixtures.hpp"
#include "orbigraph/selfsim.hpp"
#include "orbigraph/snf.hpp"
#include "orbigraph/spectrum.hpp"

using namespace orbigraph;

namespace {

void quotient_fast(benchmark::State& state) {
  const graph_action a = two_vertex_loop_action();
  for (auto _ : state) benchmark::DoNotOptimize(character_adjacency(a));
}

void quotient_oracle(benchmark::State& state) {
  const graph_action a = two_vertex_loop_action();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_adjacency(a));
}

void kappa(benchmark::State& state) {
  const graph_action a = two_vertex_loop_action();
  for (auto _ : state) benchmark::DoNotOptimize(kappa_dimension_check(a));
}

void conjugacy(benchmark::State& state) {
  const finite_group s5 = symmetric_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(s5));
}

void smith_form(benchmark::State& state) {
  std::mt19937_64 rng(0xb51fu);
  std::uniform_int_distribution<int> val(-9, 9);
  std::vector<big_matrix> pool;
  for (int i = 0; i < 16; ++i) {
    big_matrix m(12, 12);
    for (auto& x : m.a) x = val(rng);
    pool.push_back(m);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(pool[i]));
    i = (i + 1) % pool.size();
  }
}

void word_on_deep_path(benchmark::State& state) {
  const selfsim_automaton a = four_edge_selfsim();
  const gen_word hg = concat_words(a, letter_word(a, 2), letter_word(a, 1));
  graph_path p{0, {}};
  Id cur = 0;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    const Id e = (cur == 0) ? 3 : 1;  // zig-zag between the two vertices
    p.edges.push_back(e);
    cur = a.graph.esrc[e];
  }
  for (auto _ : state) benchmark::DoNotOptimize(act_word(a, hg, p));
}

void forest_action(benchmark::State& state) {
  const selfsim_automaton a = four_edge_selfsim();
  for (auto _ : state)
    benchmark::DoNotOptimize(induced_forest_action(a, static_cast<int>(state.range(0))));
}

void intertwiner_table(benchmark::State& state) {
  const graph_action a = two_vertex_loop_action();
  for (auto _ : state) benchmark::DoNotOptimize(dr_dimension_table(a, 0, 3));
}

}  // namespace

BENCHMARK(quotient_fast);
BENCHMARK(quotient_oracle);
BENCHMARK(kappa);
BENCHMARK(conjugacy);
BENCHMARK(smith_form)->Unit(benchmark::kMicrosecond);
BENCHMARK(word_on_deep_path)->Arg(8)->Arg(32);
BENCHMARK(forest_action)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(intertwiner_table)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
