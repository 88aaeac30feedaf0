#include "inse/inls/engine.hpp"
#include "inse/ins_set.hpp"
#include "inse/logic/check.hpp"
#include "inse/nrdm/reps.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace inse;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F f) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

std::vector<std::string> named_domain(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

InsRelation random_relation(logic::GradeGen& gen, std::vector<std::string> xs,
                            std::vector<std::string> ys) {
  std::vector<InsTriple> g;
  g.reserve(xs.size() * ys.size());
  for (std::size_t k = 0; k < xs.size() * ys.size(); ++k) g.push_back(gen.triple());
  return InsRelation(std::move(xs), std::move(ys), std::move(g));
}

void bench_compose(int size, int reps) {
  logic::GradeGen gen(42);
  const auto n = static_cast<std::size_t>(size);
  auto xs = named_domain("x", n), ys = named_domain("y", n), zs = named_domain("z", n);
  InsRelation r = random_relation(gen, xs, ys);
  InsRelation s = random_relation(gen, ys, zs);
  double serial = time_best_of(reps, [&] { ins_compose_serial(r, s); });
  double parallel = time_best_of(reps, [&] { ins_compose(r, s, exec_policy::parallel); });
  std::cout << "compose " << size << "x" << size << ": serial " << serial << " s, parallel "
            << parallel << " s, speedup " << serial / parallel << "\n";
}

void bench_inls(int grid, int reps) {
  inls::RuleBase rb;
  rb.inputs = {{"x", 0, 10}};
  rb.output = {"y", 0, 10};
  for (int k = 0; k < 8; ++k) {
    inls::Rule rule;
    double c = 1.0 + k;
    auto tz = [&](double off) {
      return inls::MembershipFn::crisp(inls::Trapezoid(0, off, off + 1, 10));
    };
    rule.antecedents.push_back({tz(0.5 * k), tz(0.2 * k), tz(0.1 * k)});
    rule.consequent = {inls::MembershipFn::crisp(inls::Trapezoid(c - 1, c, c, c + 1)),
                       inls::MembershipFn::crisp(inls::Trapezoid(0, 0, 10, 10)),
                       inls::MembershipFn::crisp(inls::Trapezoid(0, 0, 10, 10))};
    rb.rules.push_back(rule);
  }
  inls::Inputs in;
  in["x"] = inls::InputValue::of(5.0);
  inls::EngineConfig cfg;
  cfg.y_samples = grid;
  double serial = time_best_of(reps, [&] { inls::run_inference_serial(rb, in, cfg); });
  double parallel = time_best_of(reps, [&] { inls::run_inference(rb, in, cfg); });
  std::cout << "inls grid " << grid << ": serial " << serial << " s, parallel " << parallel
            << " s, speedup " << serial / parallel << "\n";
}

void bench_stronggen(int grid_k, int reps) {
  auto dom = std::make_shared<nrdm::Domain>(nrdm::Domain{"D", {"a", "b"}});
  nrdm::Scheme sx({{"X", dom}, {"Y", dom}});
  nrdm::Scheme sy({{"Y", dom}, {"Z", dom}});
  nrdm::NeutroRelation r(sx), s(sy);
  // Wide gaps maximize the completion sets.
  for (std::size_t i = 0; i < sx.tuple_count(); ++i)
    r.set(nrdm::tuple_at(sx, i), nrdm::ConfidencePair(0.0, 1e-12));
  for (std::size_t i = 0; i < sy.tuple_count(); ++i)
    s.set(nrdm::tuple_at(sy, i), nrdm::ConfidencePair(0.0, 1e-12));
  auto op = nrdm::StrongGenOp::join_op();
  double serial = time_best_of(
      reps, [&] { nrdm::strong_gen_check(op, r, &s, grid_k, exec_policy::serial); });
  double parallel = time_best_of(
      reps, [&] { nrdm::strong_gen_check(op, r, &s, grid_k, exec_policy::parallel); });
  std::cout << "strong-gen join grid 1/" << grid_k << ": serial " << serial << " s, parallel "
            << parallel << " s, speedup " << serial / parallel << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP comparison for the parallel kernels"};
  std::string kernel = "all";
  int size = 220, grid = 20001, grid_k = 4, reps = 3;
  app.add_option("--kernel", kernel, "compose|inls|strong-gen|all");
  app.add_option("--size", size, "relation domain size for compose");
  app.add_option("--grid", grid, "output grid resolution for inls");
  app.add_option("--grid-k", grid_k, "completion grid parameter for strong-gen");
  app.add_option("--reps", reps, "repetitions (best time reported)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (kernel == "compose" || kernel == "all") bench_compose(size, reps);
    if (kernel == "inls" || kernel == "all") bench_inls(grid, reps);
    if (kernel == "strong-gen" || kernel == "all") bench_stronggen(grid_k, reps);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
