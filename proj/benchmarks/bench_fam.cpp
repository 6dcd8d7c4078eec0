#include <benchmark/benchmark.h>

#include "famkd/attention.hpp"
#include "famkd/fam.hpp"
#include "famkd/model.hpp"
#include "famkd/rng.hpp"
#include "famkd/spectral.hpp"
#include "famkd/verify.hpp"

using namespace famkd;

namespace {

Tensor4f random_input(int n, int c, int h, int w, uint64_t seed) {
    Rng rng(seed);
    Tensor4f t(n, c, h, w);
    for (int64_t i = 0; i < t.numel(); ++i) t[i] = static_cast<float>(rng.uniform(-1.0, 1.0));
    return t;
}

void BM_Fft2(benchmark::State& state) {
    const int hw = static_cast<int>(state.range(0));
    Tensor4f x = random_input(1, 16, hw, hw, 1);
    for (auto _ : state) {
        GradTape<float> tape;
        ComplexVId s = ops::fft2(tape, tape.constant(x));
        benchmark::DoNotOptimize(tape.val(s.re).ptr());
    }
    state.SetItemsProcessed(state.iterations() * 16 * hw * hw);
}
BENCHMARK(BM_Fft2)->Arg(8)->Arg(16)->Arg(32);

// the complexity claim: linear in C_out at fixed C_in, H, W
void BM_FamForward(benchmark::State& state) {
    const int c_out = static_cast<int>(state.range(0));
    FamParams<float> p = init_fam<float>(c_out, 64, 16, 16, 0.01, 2);
    Tensor4f x = random_input(2, 64, 16, 16, 3);
    for (auto _ : state) {
        GradTape<float> tape;
        FamVars<float> v = register_fam(tape, p, false);
        VId out = ops::fam_forward(tape, tape.constant(x), v, p.hpf);
        benchmark::DoNotOptimize(tape.val(out).ptr());
    }
    state.SetItemsProcessed(state.iterations() * int64_t{c_out} * 64 * 16 * 16);
}
BENCHMARK(BM_FamForward)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_FamForwardBackward(benchmark::State& state) {
    const int c_out = static_cast<int>(state.range(0));
    FamParams<float> p = init_fam<float>(c_out, 32, 16, 16, 0.01, 4);
    Tensor4f x = random_input(2, 32, 16, 16, 5);
    Tensor4f target(2, c_out, 16, 16, 0.1f);
    for (auto _ : state) {
        GradTape<float> tape;
        FamVars<float> v = register_fam(tape, p, true);
        VId out = ops::fam_forward(tape, tape.constant(x), v, p.hpf);
        VId loss = ops::mse(tape, tape.constant(target), out);
        tape.backward(loss);
        benchmark::DoNotOptimize(tape.grad(v.k_re).ptr());
    }
}
BENCHMARK(BM_FamForwardBackward)->Arg(16)->Arg(64);

void BM_CrossAttentionFuse(benchmark::State& state) {
    const int hw = static_cast<int>(state.range(0));
    CrossAttnParams<float> p = init_cross_attn<float>(16, 32, 8, 6, true);
    Tensor4f lo = random_input(2, 16, hw, hw, 7);
    Tensor4f hi = random_input(2, 32, hw / 2, hw / 2, 8);
    for (auto _ : state) {
        GradTape<float> tape;
        CrossAttnVars<float> v = register_cross_attn(tape, p, false);
        VId out = ops::cross_attention_fuse(tape, tape.constant(lo), tape.constant(hi), v);
        benchmark::DoNotOptimize(tape.val(out).ptr());
    }
}
BENCHMARK(BM_CrossAttentionFuse)->Arg(8)->Arg(16)->Arg(32);

void BM_Resnet8TrainStep(benchmark::State& state) {
    StagedModel<float> m = build_model<float>(8, 10, 9);
    Tensor4f batch = random_input(16, 3, 32, 32, 10);
    std::vector<int> labels(16, 1);
    for (auto _ : state) {
        GradTape<float> tape;
        ModelVars<float> vars = register_model(tape, m, true);
        ForwardResult<float> fwd =
            forward_with_taps(tape, vars, tape.constant(batch), RunMode::kTrain);
        VId loss = ops::cross_entropy_mean(tape, fwd.logits, labels);
        tape.backward(loss);
        benchmark::DoNotOptimize(tape.grad(vars.fc_w).ptr());
    }
}
BENCHMARK(BM_Resnet8TrainStep);

}  // namespace

BENCHMARK_MAIN();
