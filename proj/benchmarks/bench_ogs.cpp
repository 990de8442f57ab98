#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ogs/alt_ogs.hpp"
#include "ogs/generators.hpp"
#include "ogs/sn_ogs.hpp"

namespace {

using namespace ogs;

std::vector<Permutation> random_elements(unsigned n, bool even, std::size_t count)
{
  std::mt19937_64 rng(n);
  std::vector<Point> images(n);
  std::vector<Permutation> out;
  while (out.size() < count) {
    for (unsigned i = 0; i < n; ++i)
      images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    Permutation p(images);
    if (!even || parity(p) == Parity::even)
      out.push_back(p);
  }
  return out;
}

void BM_compose(benchmark::State &state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto xs = random_elements(n, false, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_compose)->Arg(8)->Arg(64)->Arg(512);

void BM_encode_sn(benchmark::State &state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto xs = random_elements(n, false, 64);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(encode_sn(xs[i++ % 64]));
}
BENCHMARK(BM_encode_sn)->Arg(8)->Arg(32)->Arg(128);

void BM_decode_sn(benchmark::State &state)
{
  auto n = static_cast<unsigned>(state.range(0));
  std::vector<SnCanonicalForm> forms;
  for (auto const &p : random_elements(n, false, 64))
    forms.push_back(encode_sn(p));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(decode_sn(forms[i++ % 64]));
}
BENCHMARK(BM_decode_sn)->Arg(8)->Arg(32)->Arg(128);

void BM_encode_alt(benchmark::State &state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto xs = random_elements(n, true, 64);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(encode_alt(xs[i++ % 64]));
}
BENCHMARK(BM_encode_alt)->Arg(8)->Arg(32)->Arg(128);

void BM_decode_alt(benchmark::State &state)
{
  auto n = static_cast<unsigned>(state.range(0));
  std::vector<AltCanonicalForm> forms;
  for (auto const &p : random_elements(n, true, 64))
    forms.push_back(encode_alt(p));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(decode_alt(forms[i++ % 64]));
}
BENCHMARK(BM_decode_alt)->Arg(8)->Arg(32)->Arg(128);

// Random t-words of the given length at degree 8.
void BM_normalize_sn(benchmark::State &state)
{
  constexpr unsigned n = 8;
  auto len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(len);
  std::uniform_int_distribution<int> sub(2, n), exp(1, n - 1);
  std::vector<GeneratorWord> words;
  for (int k = 0; k < 16; ++k) {
    GeneratorWord w(n);
    for (std::size_t j = 0; j < len; ++j)
      w.append(Gen::T, sub(rng), exp(rng));
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(normalize_sn(words[i++ % 16]));
}
BENCHMARK(BM_normalize_sn)->Arg(4)->Arg(16)->Arg(64);

} // namespace
BENCHMARK_MAIN();
