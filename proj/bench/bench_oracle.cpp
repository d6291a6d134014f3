#include <benchmark/benchmark.h>

#include "radram/chartab.hpp"
#include "radram/oracle.hpp"

using namespace radram;

namespace {

GroupDesc group_of(const benchmark::State& st) {
  return GroupDesc::make(static_cast<std::uint64_t>(st.range(0)), static_cast<unsigned>(st.range(1)),
                         static_cast<unsigned>(st.range(2)));
}

const CharacterTable& table_for(const GroupDesc& G) {
  static std::vector<std::pair<GroupDesc, CharacterTable>> cache;
  for (const auto& [g, t] : cache)
    if (g == G) return t;
  cache.emplace_back(G, CharacterTable::build(G));
  return cache.back().second;
}

void BM_OrbitsSerial(benchmark::State& st) {
  const GroupDesc G = group_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(classes_bruteforce(G).orbit_count);
  st.counters["order"] = static_cast<double>(G.order());
}

void BM_OrbitsParallel(benchmark::State& st) {
  const GroupDesc G = group_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(classes_bruteforce_parallel(G).orbit_count);
  st.counters["order"] = static_cast<double>(G.order());
}

void BM_RowOrthSerial(benchmark::State& st) {
  const CharacterTable& t = table_for(group_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(row_orthogonality(t).passed);
}

void BM_RowOrthParallel(benchmark::State& st) {
  const CharacterTable& t = table_for(group_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(row_orthogonality_parallel(t).passed);
}

void BM_ColumnOrthSerial(benchmark::State& st) {
  const CharacterTable& t = table_for(group_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(column_orthogonality(t, false).passed);
}

void BM_ColumnOrthParallel(benchmark::State& st) {
  const CharacterTable& t = table_for(group_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(column_orthogonality(t, true).passed);
}

void groups(benchmark::internal::Benchmark* b) {
  b->Args({5, 2, 2})->Args({5, 3, 2})->Args({7, 3, 2})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_OrbitsSerial)->Apply(groups);
BENCHMARK(BM_OrbitsParallel)->Apply(groups);
BENCHMARK(BM_RowOrthSerial)->Apply(groups);
BENCHMARK(BM_RowOrthParallel)->Apply(groups);
BENCHMARK(BM_ColumnOrthSerial)->Apply(groups);
BENCHMARK(BM_ColumnOrthParallel)->Apply(groups);

BENCHMARK_MAIN();
