// Acceptance gate: one line per criterion, PASS or FAIL, exit nonzero when
// anything fails.  Runs the library checks in-process at pinned
// configurations and drives the CLI binary (argv[1]) for the
// reproducibility criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "howe/branching.hpp"
#include "howe/checks.hpp"
#include "howe/exterior.hpp"

namespace {

int g_failures = 0;

void criterion(const std::string& label, bool ok) {
  std::printf("%s - %s\n", ok ? "PASS" : "FAIL", label.c_str());
  if (!ok) ++g_failures;
}

howe::RunConfig config_for(int l, int max_degree = 4, int trials = 20) {
  howe::RunConfig cfg;
  cfg.l = l;
  cfg.max_degree = max_degree;
  cfg.trials = trials;
  cfg.seed = 0;
  return cfg;
}

bool passes(const howe::CheckReport& report) {
  if (report.status != howe::CheckStatus::pass && !report.witness.empty())
    std::fprintf(stderr, "  witness: %s\n", report.witness.c_str());
  return report.status == howe::CheckStatus::pass;
}

bool fails_with_witness(const howe::CheckReport& report) {
  return report.status == howe::CheckStatus::fail && !report.witness.empty();
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  if (pclose(pipe) != 0) out.clear();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace howe;
  const std::string cli = argc > 1 ? argv[1] : "";

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_relations(ctx, config_for(l)));
    }
    criterion("the five operators satisfy the superalgebra relations at l = 2, 3", ok);
  }

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_grading(ctx, config_for(l)));
    }
    criterion("h acts by (r - l)/2 on every form degree and parity at l = 2, 3", ok);
  }

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_equivariance(ctx, config_for(l)));
    }
    criterion("all five operators commute with the full symplectic action at l = 2, 3", ok);
  }

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_ladder(ctx, config_for(l)));
    }
    criterion("the lowering-raising scalar matches on every summand, zeros included, at l = 2, 3",
              ok);
  }

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_projectors(ctx, config_for(l)));
    }
    criterion("the projector family is an orthogonal equivariant resolution of each degree", ok);
  }

  {
    bool ok = true;
    for (int l : {2, 3}) {
      WContext ctx(l);
      ok = ok && passes(check_commutation(ctx, config_for(l)));
    }
    criterion("the swap identity holds for k = 0..4 on every basis element at l = 2, 3", ok);
  }

  {
    bool ok = true;
    for (int l = 2; l <= 5; ++l) ok = ok && passes(check_decomposition(config_for(l)));
    ok = ok && decomposition_table(2).total_summands == 18;
    criterion("closed-form and branched decompositions agree for l = 2..5, 18 summands at l = 2",
              ok);
  }

  {
    WContext ctx(2);
    criterion("the highest-weight census at l = 2, degree 6 finds exactly the 18 expected vectors",
              passes(check_highest_weight_census(ctx, config_for(2, 6))));
  }

  {
    bool ok = true;
    for (int l : {2, 3, 4}) ok = ok && passes(check_irreducibility(config_for(l)));
    criterion("every ladder module satisfies the relations and is irreducible at l = 2, 3, 4", ok);
  }

  {
    WContext ctx(2);
    bool ok = passes(check_duality_equivariance(ctx, config_for(2))) &&
              passes(check_duality_injectivity(ctx, config_for(2)));
    criterion("the tower maps intertwine all five operators and are injective on every rung", ok);
  }

  {
    WContext ctx(2);
    criterion("the quadratic element is nontrivial, central, and has recorded scalars",
              passes(check_casimir(ctx, config_for(2))));
  }

  {
    bool ok = true;
    for (const char* corrupt : {"f-minus", "f-plus", "h", "a-coeff"}) {
      RunConfig cfg = config_for(2);
      cfg.corrupt = corrupt;
      WContext bad(2, parse_corruption(cfg.corrupt));
      bool tripped = fails_with_witness(check_grading(bad, cfg)) ||
                     fails_with_witness(check_relations(bad, cfg)) ||
                     fails_with_witness(check_irreducibility(cfg));
      if (!tripped) std::fprintf(stderr, "  corruption %s went unnoticed\n", corrupt);
      ok = ok && tripped;
    }
    WContext ctx(2);
    WEndo skew = [](const SpinorForm& w) {
      SpinorForm out(w.l());
      for (const auto& [mask, poly] : w.terms()) {
        int sign = wedge_word::insert_sign(mask, 1);
        if (sign != 0)
          out.add_term(mask | 1u, sign > 0 ? poly : poly.scaled(GaussianRational(-1)));
      }
      return out;
    };
    ok = ok && fails_with_witness(check_operator_equivariance(ctx, config_for(2), "wedge-1", skew));
    criterion("all five deliberate corruptions are caught with an explicit witness", ok);
  }

  {
    bool ok = !cli.empty();
    if (ok) {
      const std::string cmd = cli + " verify grading relations --format json --trials 5 2>/dev/null";
      std::string first = capture(cmd);
      std::string second = capture(cmd);
      ok = !first.empty() && first == second;
    }
    criterion("two identically configured CLI runs produce byte-identical reports", ok);
  }

  if (g_failures > 0) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
