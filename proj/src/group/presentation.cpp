#include <string>

#include "abq/error.hpp"
#include "abq/group.hpp"

namespace abq {

using linalg::IntMatrix;

PresentationSpec structure_group_presentation(FpParameters const& p) {
  p.validate();
  std::size_t const r = p.r;
  PresentationSpec ps;
  ps.r = r;
  auto g = [r](std::size_t i, std::size_t j) { return (i - 1) * r + (j - 1); };
  auto h = [r](std::size_t i) { return r * r + (i - 1); };
  // Index i + k taken cyclically in 1..r.
  auto wrap = [r](std::size_t v) { return (v - 1) % r + 1; };

  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      ps.central_generators.push_back("g" + std::to_string(i) + "," + std::to_string(j));
  for (std::size_t i = 1; i <= r; ++i) ps.main_generators.push_back("h" + std::to_string(i));

  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j)
      ps.relations.push_back({"Gij", {{g(i, j), 1}, {g(j, i), 1}}});

  for (std::size_t i = 1; i <= r; ++i) ps.relations.push_back({"Gij2", {{g(i, i), 1}}});

  std::size_t const gens = ps.generator_count();
  for (std::size_t c = 0; c < r * r; ++c) {
    for (std::size_t other = 0; other < gens; ++other) {
      if (other < r * r && other <= c) continue;
      ps.relations.push_back({"Gij3", {{c, 1}, {other, 1}, {c, -1}, {other, -1}}});
    }
  }

  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j < r; ++j) {
      Relation rel{"Gij4", {}};
      for (std::size_t k = 1; k <= j; ++k) {
        std::int64_t const e = p.collections[i - 1].m[j - 1][k - 1];
        if (e != 0) rel.word.emplace_back(g(i, wrap(i + k)), e);
      }
      ps.relations.push_back(std::move(rel));
    }
  }

  // h_i h_j = g_{i,j} h_j h_i, as the relator h_i h_j h_i^-1 h_j^-1 g_{i,j}^-1.
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      if (i != j)
        ps.relations.push_back(
            {"Gij5", {{h(i), 1}, {h(j), 1}, {h(i), -1}, {h(j), -1}, {g(i, j), -1}}});
  return ps;
}

IntMatrix PresentationSpec::abelianized() const {
  IntMatrix m(relations.size(), generator_count());
  for (std::size_t k = 0; k < relations.size(); ++k)
    for (auto const& [gen, e] : relations[k].word) m(k, gen) += e;
  return m;
}

IntMatrix PresentationSpec::central_relations() const {
  std::size_t const cols = central_generators.size();
  IntMatrix m(0, cols);
  std::vector<linalg::Integer> row(cols);
  for (auto const& rel : relations) {
    if (rel.family != "Gij" && rel.family != "Gij2" && rel.family != "Gij4") continue;
    std::fill(row.begin(), row.end(), linalg::Integer(0));
    for (auto const& [gen, e] : rel.word) row[gen] += e;
    m.append_row(row);
  }
  return m;
}

Element act(QuandleTable const& q, Element a, GroupWord const& w) {
  auto const n = static_cast<Element>(q.size());
  if (a >= n) throw Error(ErrorKind::EntryOutOfRange, "element out of range", {a});
  for (auto const& l : w) {
    if (l.element >= n) {
      throw Error(ErrorKind::EntryOutOfRange, "word letter out of range", {l.element});
    }
    if (l.sign == 1) {
      a = q.op(a, l.element);
    } else if (l.sign == -1) {
      a = q.inv_op(a, l.element);
    } else {
      throw Error(ErrorKind::InvalidShape, "letter sign must be +1 or -1", {l.sign});
    }
  }
  return a;
}

GroupWord commutator_word(Element b, Element c) {
  return {{b, -1}, {c, -1}, {b, 1}, {c, 1}};
}

}  // namespace abq
