// Parallel kernels against the serial reference, on MNIST-shaped batches.
#include <benchmark/benchmark.h>

#include <random>

#include "flmc/kernels.hpp"
#include "flmc/nn.hpp"
#include "flmc/rng.hpp"

using namespace flmc;

namespace {

struct Setup {
  ModelParams p;
  Matrix x;
  kernels::ForwardCache cache;
  Matrix dout;

  Setup(int batch, int hidden) {
    p = init_params({784, hidden, 10, Scaling::MeanField}, 1);
    Rng rng = make_rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    x.resize(batch, 784);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = u(rng);
    kernels::forward(p, x, cache);
    dout = Matrix::Constant(batch, 10, 0.01);
  }
};

void BM_Forward(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    kernels::forward(s.p, s.x, s.cache);
    benchmark::DoNotOptimize(s.cache.out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_ForwardSerial(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    kernels::serial::forward(s.p, s.x, s.cache);
    benchmark::DoNotOptimize(s.cache.out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_Backward(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    Gradient g = kernels::backward(s.p, s.x, s.cache, s.dout);
    benchmark::DoNotOptimize(g.hidden.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_BackwardSerial(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    Gradient g = kernels::serial::backward(s.p, s.x, s.cache, s.dout);
    benchmark::DoNotOptimize(g.hidden.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

// (batch, hidden): a local SGD step and an evaluation chunk.
void shapes(benchmark::internal::Benchmark* b) {
  for (int n : {200, 1600}) {
    b->Args({50, n});
    b->Args({512, n});
  }
  b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_Forward)->Apply(shapes);
BENCHMARK(BM_ForwardSerial)->Apply(shapes);
BENCHMARK(BM_Backward)->Apply(shapes);
BENCHMARK(BM_BackwardSerial)->Apply(shapes);

BENCHMARK_MAIN();
