#include "search.hpp"

namespace sroman::detail {

namespace {

void descend(SearchContext& ctx, Node& node) {
  std::vector<Node> children;
  if (!ctx.expand(node, children)) return;
  for (auto& child : children) {
    if (ctx.finished()) return;
    descend(ctx, child);
  }
}

}  // namespace

void run_serial(SearchContext& ctx, Node root) { descend(ctx, root); }

}  // namespace sroman::detail
