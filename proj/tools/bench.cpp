// Compares the serial reference kernels against the OpenMP paths on the
// scan-heavy workloads and reports wall times plus agreement.

#include "nilsum/commands.hpp"

#include <chrono>
#include <cstdio>

using namespace nilsum;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    GradedAlgebra W = zassenhaus(5, 1);
    std::vector<Subspace> a, b;
    double ts = time_ms([&] { a = enumerate_subalgebras(W.algebra, 1u << 20, Exec::serial); });
    double tp = time_ms([&] { b = enumerate_subalgebras(W.algebra, 1u << 20, Exec::parallel); });
    row("subalgebra scan W_1(1) p=5", ts, tp, a == b);
  }

  {
    GradedAlgebra W = zassenhaus(5, 1);
    SearchOptions o;
    o.fast_paths = false;
    SearchResult rs, rp;
    o.exec = Exec::serial;
    double ts = time_ms([&] { rs = search_decomposition(W.algebra, o); });
    o.exec = Exec::parallel;
    double tp = time_ms([&] { rp = search_decomposition(W.algebra, o); });
    row("pair search W_1(1) p=5", ts, tp,
        rs.status == rp.status && rs.stats.pairs_tested == rp.stats.pairs_tested);
  }

  {
    ParsedAlgebra hw = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
    std::vector<Subspace> a, b;
    double ts = time_ms([&] { a = one_dim_ideals(hw.algebra, 1u << 20, Exec::serial); });
    double tp = time_ms([&] { b = one_dim_ideals(hw.algebra, 1u << 20, Exec::parallel); });
    row("one-dim ideal scan dim 8 p=5", ts, tp, a == b);
  }

  {
    Lemma4Report rs, rp;
    double ts = time_ms([&] { rs = lemma4_exhaustive(5, 1, 1u << 20, Exec::serial); });
    double tp = time_ms([&] { rp = lemma4_exhaustive(5, 1, 1u << 20, Exec::parallel); });
    row("nilpotent-derivation scan W_1 p=5", ts, tp,
        rs.qualifying == rp.qualifying && rs.qualifying_dims == rp.qualifying_dims);
  }

  {
    Lemma4Report rs, rp;
    double ts = time_ms([&] { rs = lemma4_sample(3, 2, 200, 7, Exec::serial); });
    double tp = time_ms([&] { rp = lemma4_sample(3, 2, 200, 7, Exec::parallel); });
    row("lemma4 sampling W_2 p=3", ts, tp,
        rs.qualifying == rp.qualifying && rs.qualifying_dims == rp.qualifying_dims);
  }

  return 0;
}
