#include "turan/tree_embedding.hh"

#include <algorithm>
#include <optional>

#include "turan/errors.hh"

namespace turan {

std::vector<std::vector<Vertex>> tree_blocks(const Graph& t,
                                             const Embedding& gamma_embedding,
                                             const BlowupResult& blowup) {
  const std::size_t n = t.size();
  auto region = [&](Vertex x) {
    return blowup.copy_index[gamma_embedding.image[x]];
  };

  std::vector<std::size_t> block_of(n, n);
  std::vector<std::vector<Vertex>> blocks;
  auto grow = [&](Vertex seed) {
    const std::size_t id = blocks.size();
    std::vector<Vertex> block{seed};
    block_of[seed] = id;
    for (std::size_t head = 0; head < block.size(); ++head)
      for (Vertex w : t.neighbours(block[head]))
        if (block_of[w] == n && region(w) == region(seed)) {
          block_of[w] = id;
          block.push_back(w);
        }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  };

  if (n == 0) return blocks;
  grow(0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t k = 0; k < blocks[b].size(); ++k)
      for (Vertex w : t.neighbours(blocks[b][k]))
        if (block_of[w] == n) grow(w);
  return blocks;
}

namespace {

std::optional<EmbeddingFailure> fail(std::size_t step, std::string reason) {
  return EmbeddingFailure{step, std::move(reason)};
}

}  // namespace

EmbedResult embed_tree(const Graph& t, const Embedding& gamma_embedding,
                       const BlowupResult& blowup,
                       std::span<const CopyFamily> families,
                       const ColouredDigraph& digraph) {
  require_tree_pattern(t);
  if (!is_valid_embedding(blowup.graph, t, gamma_embedding))
    throw ValidationError("embed_tree: not an embedding of T into the blow-up");
  if (families.empty()) throw ValidationError("embed_tree: no families");
  const auto& partition = families.front().partition;
  if (!partition)
    throw ValidationError("embed_tree: families must be rainbow");
  for (const auto& f : families)
    if (f.partition != partition)
      throw ValidationError("embed_tree: families use different partitions");
  const Graph& host = *families.front().host;
  const std::size_t depth = families.size();

  EmbeddingCertificate cert;
  cert.x_partition = tree_blocks(t, gamma_embedding, blowup);
  const std::size_t k = cert.x_partition.size();
  if (k > depth)
    throw UnsupportedSize("embed_tree: " + std::to_string(k) +
                          " blocks but only " + std::to_string(depth) +
                          " families");

  auto phi = [&](Vertex x) { return blowup.phi[gamma_embedding.image[x]]; };
  auto region = [&](Vertex x) {
    return blowup.copy_index[gamma_embedding.image[x]];
  };

  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> f(t.size(), kUnset);
  Row used(host.size());

  auto place_block = [&](const std::vector<Vertex>& block,
                         const Embedding& copy) {
    for (Vertex x : block) {
      f[x] = copy.image[phi(x)];
      used.set(f[x]);
    }
  };
  auto block_fits = [&](const std::vector<Vertex>& block,
                        const Embedding& copy) {
    for (Vertex x : block)
      if (used.test(copy.image[phi(x)])) return false;
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        if (copy.image[phi(block[a])] == copy.image[phi(block[b])]) return false;
    return true;
  };

  // Base case: any copy of F_t.
  {
    const auto& family = families[depth - 1];
    if (family.empty()) return *fail(0, "F_t is empty");
    place_block(cert.x_partition[0], family.embeddings[0]);
    EmbeddingStep step;
    step.block = 0;
    step.region = region(cert.x_partition[0].front());
    step.family = depth;
    step.copy = 0;
    cert.steps.push_back(step);
  }

  for (std::size_t s = 1; s < k; ++s) {
    const auto& block = cert.x_partition[s];
    const std::size_t family_index = depth - s;  // F_{t-i} with i = s
    const auto& family = families[family_index - 1];

    EmbeddingStep step;
    step.block = s;
    step.family = family_index;
    step.region = region(block.front());
    bool found_edge = false;
    for (Vertex y : block) {
      for (Vertex x : t.neighbours(y))
        if (f[x] != kUnset) {
          step.attach_tree = x;
          step.attach_block = y;
          found_edge = true;
          break;
        }
      if (found_edge) break;
    }
    if (!found_edge) throw InternalError("block is not attached to the tree");

    const Vertex anchor_h = phi(step.attach_tree);
    const Vertex anchor_host = f[step.attach_tree];
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < family.size(); ++c)
      if (family.embeddings[c].image[anchor_h] == anchor_host)
        candidates.push_back(c);

    std::optional<std::size_t> chosen;
    if (step.region == 0) {
      for (std::size_t c : candidates)
        if (block_fits(block, family.embeddings[c])) {
          chosen = c;
          break;
        }
    } else {
      const Vertex target = phi(step.attach_block);
      step.red_attachment = digraph.is_red(anchor_h, target);
      std::vector<Vertex> s_vertices;
      for (Vertex v = 0; v < digraph.vertex_count; ++v)
        if (digraph.blue_reach[v] & (VertexMask{1} << target))
          s_vertices.push_back(v);

      auto s_part = [&](std::size_t c) {
        std::vector<Vertex> out;
        for (Vertex v : s_vertices) out.push_back(family.embeddings[c].image[v]);
        std::sort(out.begin(), out.end());
        return out;
      };
      // Greedy collection of copies with pairwise disjoint S-parts.
      std::vector<std::size_t> collection;
      Row taken(host.size());
      for (std::size_t c : candidates) {
        if (collection.size() == depth) break;
        const auto part = s_part(c);
        if (std::any_of(part.begin(), part.end(),
                        [&](Vertex x) { return taken.test(x); }))
          continue;
        for (Vertex x : part) taken.set(x);
        collection.push_back(c);
      }
      step.disjoint_copies = collection.size();

      auto avoids_used = [&](std::size_t c) {
        const auto part = s_part(c);
        return std::none_of(part.begin(), part.end(),
                            [&](Vertex x) { return used.test(x); }) &&
               block_fits(block, family.embeddings[c]);
      };
      for (std::size_t c : collection)
        if (avoids_used(c)) {
          chosen = c;
          break;
        }
      if (!chosen)
        for (std::size_t c : candidates)
          if (avoids_used(c)) {
            chosen = c;
            break;
          }
    }

    if (!chosen)
      return *fail(s, "no copy in F_" + std::to_string(family_index) +
                          " extends the tree through vertex " +
                          std::to_string(step.attach_tree) + " to block " +
                          std::to_string(s + 1));
    step.copy = *chosen;
    place_block(block, family.embeddings[*chosen]);
    cert.steps.push_back(step);
  }

  cert.tree_map.image = f;
  if (!is_valid_embedding(host, t, cert.tree_map))
    throw InternalError("embed_tree produced an invalid embedding");
  for (Vertex x = 0; x < t.size(); ++x)
    if (partition->label(f[x]) != phi(x))
      throw InternalError("embed_tree placed a vertex outside its class");
  return cert;
}

}  // namespace turan
