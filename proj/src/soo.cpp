#include "logo/soo.hpp"

#include <cmath>
#include <limits>

namespace logo {

namespace {

struct Entry {
  Cell cell;
  bool divided = false;  // stays in its set until the sweep ends
};

}  // namespace

RunResult run_soo(const Objective& objective, const Domain& domain, const OptimizerConfig& config,
                  const DivisionObserver& observer) {
  OptimizerConfig checked = config;
  checked.width = FixedWidth{1};
  checked.validate();

  RunResult out;
  std::vector<std::vector<Entry>> sets(1);
  CellId next_id = 0;

  Cell root = unit_cell(domain.dim(), next_id++);
  root.value = evaluate_checked(objective, domain, root.center);
  out.best_value = root.value;
  out.best_point = denormalize(root.center, domain);
  out.evaluations = 1;
  sets[0].push_back({root});

  std::size_t n = 0;
  std::size_t iteration = 0;
  bool stopped = should_stop(checked.stop, out.evaluations, n, out.best_value);

  while (!stopped) {
    ++iteration;
    const std::size_t n_at_start = n;
    bool divided_any = false;

    for (std::size_t h = 0; h < sets.size() && !stopped; ++h) {
      // Past the depth limit the sweep ends, unless nothing was divided yet.
      const double limit = std::sqrt(static_cast<double>(n + 1)) - 1.0;
      if (divided_any && static_cast<double>(h) > limit) break;

      Entry* best = nullptr;
      for (Entry& e : sets[h]) {
        if (e.divided) continue;
        if (best == nullptr || e.cell.value > best->cell.value ||
            (e.cell.value == best->cell.value && e.cell.id < best->cell.id)) {
          best = &e;
        }
      }
      if (best == nullptr) continue;

      double larger = -std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < h; ++l) {
        for (const Entry& e : sets[l]) larger = std::max(larger, e.cell.value);
      }
      if (!(best->cell.value > larger)) continue;

      best->divided = true;
      const Cell parent = best->cell;
      Trisection t = trisect(parent, next_id);
      next_id += 3;
      t.left.value = evaluate_checked(objective, domain, t.left.center);
      t.right.value = evaluate_checked(objective, domain, t.right.center);
      out.evaluations += 2;
      ++n;
      divided_any = true;
      for (const Cell* c : {&t.left, &t.right}) {
        if (c->value > out.best_value) {
          out.best_value = c->value;
          out.best_point = denormalize(c->center, domain);
        }
      }
      if (sets.size() <= h + 1) sets.resize(h + 2);
      // `best` may dangle after the resize; only the copies are used below.
      sets[h + 1].push_back({t.left});
      sets[h + 1].push_back({t.center});
      sets[h + 1].push_back({t.right});

      DivisionRecord rec{n, out.evaluations, iteration, static_cast<int>(h), 1, parent.id,
                         parent.depth, parent.value, t.left.value, t.right.value, out.best_value};
      out.trace.push_back(rec);
      if (observer) observer(rec);
      stopped = should_stop(checked.stop, out.evaluations, n, out.best_value);
    }

    for (auto& set : sets) {
      std::erase_if(set, [](const Entry& e) { return e.divided; });
    }
    if (!stopped) {
      out.iterations.push_back({iteration, n - n_at_start, n, out.evaluations, out.best_value, 1});
    }
  }

  out.divisions = n;
  if (checked.stop.target_error && checked.stop.f_star) {
    out.target_reached =
        error_metric(*checked.stop.f_star, out.best_value) < *checked.stop.target_error;
  }
  return out;
}

}  // namespace logo
