// Copyright 2026 The netdesign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netdesign/automorph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "netdesign/error.hpp"

namespace netdesign {

AutomorphismGroup::AutomorphismGroup(const Network& net,
                                     std::vector<NodeId> flat_elements)
    : n_(net.num_nodes()),
      design_nodes_(net.num_design_nodes()),
      size_(n_ == 0 ? 1 : flat_elements.size() / n_),
      elements_(std::move(flat_elements)) {
  if (design_nodes_ > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgument("too many design nodes for an automorphism group");
  }
  if (n_ != 0 && elements_.size() % n_ != 0) {
    throw InvalidArgument("element list length is not a multiple of n");
  }
  preimage_.resize(size_ * design_nodes_);
  std::vector<NodeId> inverse(n_);
  for (std::size_t k = 0; k < size_; ++k) {
    const auto perm = element(k);
    for (std::size_t i = 0; i < n_; ++i) {
      inverse[static_cast<std::size_t>(perm[i])] = static_cast<NodeId>(i);
    }
    for (std::size_t d = 0; d < design_nodes_; ++d) {
      const NodeId source = inverse[static_cast<std::size_t>(
          net.design_nodes()[d])];
      const int pos = net.design_position(source);
      if (pos < 0) {
        throw InvalidArgument("group element maps a block node onto a design node");
      }
      preimage_[k * design_nodes_ + d] = static_cast<std::uint16_t>(pos);
    }
  }
}

Design AutomorphismGroup::apply(std::size_t k, const Design& x) const {
  const auto pre = design_preimage(k);
  Design y;
  y.levels.resize(design_nodes_);
  for (std::size_t d = 0; d < design_nodes_; ++d) y[d] = x[pre[d]];
  return y;
}

namespace {

// Equitable refinement of the role colouring: repeatedly split colour
// classes by the multisets of neighbour colours (both directions) until the
// number of classes stops growing. Colour ids come from sorted signatures,
// so they do not depend on node labels.
std::vector<int> RefineColours(const Network& net) {
  const std::size_t n = net.num_nodes();
  std::vector<int> colour(n);
  for (std::size_t i = 0; i < n; ++i) {
    colour[i] = net.symmetry_colour(static_cast<NodeId>(i));
  }
  std::size_t classes = 0;
  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  while (true) {
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& [own, out, in] = sig[i];
      own = colour[i];
      for (NodeId k : net.influencers(static_cast<NodeId>(i))) {
        out.push_back(colour[static_cast<std::size_t>(k)]);
      }
      for (NodeId k : net.influenced(static_cast<NodeId>(i))) {
        in.push_back(colour[static_cast<std::size_t>(k)]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
    }
    std::map<Signature, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t i = 0; i < n; ++i) colour[i] = ids[sig[i]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Network& net, std::size_t cap)
      : net_(net),
        n_(net.num_nodes()),
        cap_(cap),
        colour_(RefineColours(net)),
        image_(n_, -1),
        used_(n_, false) {
    BuildOrder();
  }

  std::vector<NodeId> Run() {
    if (n_ == 0) return {};
    Extend(0);
    return std::move(found_);
  }

 private:
  // Place next the node most connected to already placed ones, preferring
  // small colour classes; this is the VF2 frontier heuristic.
  void BuildOrder() {
    std::vector<int> class_size(n_, 0);
    for (int c : colour_) ++class_size[static_cast<std::size_t>(c)];
    std::vector<bool> placed(n_, false);
    std::vector<int> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == n_ || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[static_cast<std::size_t>(colour_[v])] <
                 class_size[static_cast<std::size_t>(colour_[best])])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(static_cast<NodeId>(best));
      const auto bump = [&](NodeId k) {
        ++links[static_cast<std::size_t>(k)];
      };
      for (NodeId k : net_.influencers(static_cast<NodeId>(best))) bump(k);
      for (NodeId k : net_.influenced(static_cast<NodeId>(best))) bump(k);
    }
  }

  bool Consistent(std::size_t depth, NodeId v, NodeId w) const {
    for (std::size_t t = 0; t < depth; ++t) {
      const NodeId u = order_[t];
      const NodeId mu = image_[static_cast<std::size_t>(u)];
      if (net_.adjacent(v, u) != net_.adjacent(w, mu) ||
          net_.adjacent(u, v) != net_.adjacent(mu, w)) {
        return false;
      }
    }
    return true;
  }

  void Extend(std::size_t depth) {
    if (depth == n_) {
      if (found_.size() / n_ >= cap_) throw GroupTooLarge(cap_);
      found_.insert(found_.end(), image_.begin(), image_.end());
      return;
    }
    const NodeId v = order_[depth];
    const int c = colour_[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || colour_[w] != c) continue;
      if (!Consistent(depth, v, static_cast<NodeId>(w))) continue;
      image_[static_cast<std::size_t>(v)] = static_cast<NodeId>(w);
      used_[w] = true;
      Extend(depth + 1);
      used_[w] = false;
      image_[static_cast<std::size_t>(v)] = -1;
    }
  }

  const Network& net_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<int> colour_;
  std::vector<NodeId> order_;
  std::vector<NodeId> image_;
  std::vector<bool> used_;
  std::vector<NodeId> found_;
};

}  // namespace

AutomorphismGroup find_automorphisms(const Network& net, std::size_t cap) {
  const std::size_t n = net.num_nodes();
  std::vector<NodeId> flat = AutomorphismSearch(net, cap).Run();
  if (n > 0) {
    // Sort elements lexicographically by image vector.
    const std::size_t z = flat.size() / n;
    std::vector<std::size_t> idx(z);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(
          flat.begin() + static_cast<std::ptrdiff_t>(a * n),
          flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * n),
          flat.begin() + static_cast<std::ptrdiff_t>(b * n),
          flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
    });
    std::vector<NodeId> sorted;
    sorted.reserve(flat.size());
    for (std::size_t k : idx) {
      sorted.insert(sorted.end(),
                    flat.begin() + static_cast<std::ptrdiff_t>(k * n),
                    flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
    }
    flat = std::move(sorted);
  }
  return AutomorphismGroup(net, std::move(flat));
}

bool is_canonical(const Design& x, const AutomorphismGroup& group) {
  const std::size_t nd = group.num_design_nodes();
  if (x.size() != nd) {
    throw InvalidArgument("design has " + std::to_string(x.size()) +
                          " entries for " + std::to_string(nd) +
                          " design nodes");
  }
  const Level* levels = x.levels.data();
  for (std::size_t k = 1; k < group.size(); ++k) {
    const std::uint16_t* pre = group.design_preimage(k).data();
    for (std::size_t d = 0; d < nd; ++d) {
      const Level image = levels[pre[d]];
      if (image < levels[d]) return false;
      if (image > levels[d]) break;
    }
  }
  return true;
}

Design orbit_representative(const Design& x, const AutomorphismGroup& group,
                            bool label_symmetry) {
  if (x.size() != group.num_design_nodes()) {
    throw InvalidArgument("design length does not match the group's network");
  }
  Design best = label_symmetry ? label_canonical(x) : x;
  for (std::size_t k = 1; k < group.size(); ++k) {
    Design y = group.apply(k, x);
    if (label_symmetry) y = label_canonical(y);
    if (y < best) best = std::move(y);
  }
  return best;
}

std::uint64_t count_orbits_bruteforce(const AutomorphismGroup& group,
                                      int treatments) {
  constexpr std::uint64_t kLimit = 10'000'000;
  if (treatments < 1) throw InvalidArgument("need at least one treatment");
  const std::size_t nd = group.num_design_nodes();
  const auto m = static_cast<std::uint64_t>(treatments);
  std::uint64_t total = 1;
  for (std::size_t d = 0; d < nd; ++d) {
    total *= m;
    if (total > kLimit) {
      throw InvalidArgument("design space too large for brute-force orbits");
    }
  }
  // Position 0 is the most significant digit.
  std::vector<std::uint64_t> weight(nd, 1);
  for (std::size_t d = nd; d-- > 1;) weight[d - 1] = weight[d] * m;

  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> digits(nd);
  std::uint64_t orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    ++orbits;
    std::uint64_t rest = code;
    for (std::size_t d = 0; d < nd; ++d) {
      digits[d] = rest / weight[d];
      rest %= weight[d];
    }
    for (std::size_t k = 0; k < group.size(); ++k) {
      const auto pre = group.design_preimage(k);
      std::uint64_t image = 0;
      for (std::size_t d = 0; d < nd; ++d) image += digits[pre[d]] * weight[d];
      seen[image] = true;
    }
  }
  return orbits;
}

std::uint64_t count_orbits_bruteforce(const Network& net, int treatments) {
  return count_orbits_bruteforce(find_automorphisms(net), treatments);
}

std::string cycle_notation(std::span<const NodeId> perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<NodeId>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      out += (first ? "" : " ") + std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(perm[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace netdesign
