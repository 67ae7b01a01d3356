#include "search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sroman::detail {

namespace {

// Levels of the search tree handed out as tasks; below this the subtree is
// explored depth-first by the task that owns it.
constexpr int kTaskDepth = 4;

void descend_serial(SearchContext& ctx, Node& node) {
  std::vector<Node> children;
  if (!ctx.expand(node, children)) return;
  for (auto& child : children) {
    if (ctx.finished()) return;
    descend_serial(ctx, child);
  }
}

void descend_tasks(SearchContext& ctx, Node& node, int depth) {
  std::vector<Node> children;
  if (!ctx.expand(node, children)) return;
  for (auto& child : children) {
    if (ctx.finished()) break;
    if (depth < kTaskDepth) {
      Node task_node = std::move(child);
#pragma omp task default(none) firstprivate(task_node, depth) shared(ctx)
      descend_tasks(ctx, task_node, depth + 1);
    } else {
      descend_serial(ctx, child);
    }
  }
#pragma omp taskwait
}

}  // namespace

void run_parallel(SearchContext& ctx, Node root, int threads) {
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads) default(none) shared(ctx, root)
#pragma omp single
  descend_tasks(ctx, root, 0);
#else
  (void)threads;
  descend_serial(ctx, root);
#endif
}

}  // namespace sroman::detail
