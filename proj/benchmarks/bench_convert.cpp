#include <benchmark/benchmark.h>

#include <string>

#include "dyck/dyck.hpp"

namespace {

// Staircase word (xD)^n: the widest matrix per symbol.
std::string staircase(std::size_t n) {
  std::string w;
  for (std::size_t i = 0; i < n; ++i) w += "xD";
  return w;
}

// Pyramid word x^n D^n: a single row.
std::string pyramid(std::size_t n) {
  return std::string(n, 'x') + std::string(n, 'D');
}

// Sawtooth (x^m D^m)^k with m = 4: overlapping mid-size cycles.
std::string sawtooth(std::size_t k) {
  std::string w;
  for (std::size_t i = 0; i < k; ++i)
    w += std::string(4, 'x') + std::string(4, 'D');
  return w;
}

void BM_parse_word(benchmark::State& state) {
  const std::string text = sawtooth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto w = dyck::parse_word(text);
    benchmark::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * text.size());
}

void BM_get_matrix_staircase(benchmark::State& state) {
  const dyck::DyckWord w =
      dyck::parse_word(staircase(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto m = dyck::get_matrix(w);
    benchmark::DoNotOptimize(m);
  }
}

void BM_get_matrix_pyramid(benchmark::State& state) {
  const dyck::DyckWord w =
      dyck::parse_word(pyramid(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto m = dyck::get_matrix(w);
    benchmark::DoNotOptimize(m);
  }
}

void BM_get_matrix_sawtooth(benchmark::State& state) {
  const dyck::DyckWord w =
      dyck::parse_word(sawtooth(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto m = dyck::get_matrix(w);
    benchmark::DoNotOptimize(m);
  }
}

void BM_get_dyck_word(benchmark::State& state) {
  const dyck::DyckMatrix m = dyck::get_matrix(
      dyck::parse_word(sawtooth(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) {
    auto w = dyck::get_dyck_word(m);
    benchmark::DoNotOptimize(w);
  }
}

void BM_validate_matrix(benchmark::State& state) {
  const dyck::DyckMatrix m = dyck::get_matrix(
      dyck::parse_word(sawtooth(static_cast<std::size_t>(state.range(0)))));
  dyck::Grid grid(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) grid[i][j] = m.at(i, j);
  for (auto _ : state) {
    auto v = dyck::validate_matrix(grid);
    benchmark::DoNotOptimize(v);
  }
}

void BM_enumerate_words(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    dyck::WordEnumerator en(n);
    while (auto w = en.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK(BM_parse_word)->Arg(64)->Arg(1024);
BENCHMARK(BM_get_matrix_staircase)->Arg(64)->Arg(256);
BENCHMARK(BM_get_matrix_pyramid)->Arg(64)->Arg(256);
BENCHMARK(BM_get_matrix_sawtooth)->Arg(16)->Arg(64);
BENCHMARK(BM_get_dyck_word)->Arg(16)->Arg(64);
BENCHMARK(BM_validate_matrix)->Arg(16)->Arg(64);
BENCHMARK(BM_enumerate_words)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
