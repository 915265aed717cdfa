#include <sstream>

#include "gridramsey/engine.hpp"
#include "tokenizer.hpp"

namespace gridramsey {

namespace {

void write_list(std::ostringstream& out, const char* key, const std::vector<std::size_t>& items) {
  out << "  " << key;
  for (auto x : items) out << ' ' << x + 1;
  out << '\n';
}

void write_edges(std::ostringstream& out, const char* key, const std::vector<ColouredEdge>& edges) {
  out << "  " << key;
  for (const auto& e : edges) out << ' ' << e.first + 1 << ' ' << e.second + 1 << ' ' << e.colour;
  out << '\n';
}

struct LineTokens {
  std::size_t line;
  std::vector<detail::Token> tokens;
};

std::vector<LineTokens> group_by_line(const std::vector<detail::Token>& tokens) {
  std::vector<LineTokens> out;
  for (const auto& t : tokens) {
    if (out.empty() || out.back().line != t.line) out.push_back({t.line, {}});
    out.back().tokens.push_back(t);
  }
  return out;
}

std::size_t one_based(const detail::Token& t) {
  const auto v = detail::to_uint(t);
  if (v == 0) throw ParseError(t.line, "indices are 1-based");
  return v - 1;
}

}  // namespace

std::string serialize_trajectory(const Refinement& refinement, bool verbose) {
  std::ostringstream out;
  for (std::size_t k = 0; k < refinement.states.size(); ++k) {
    const auto& s = refinement.states[k];
    out << "STEP " << s.step << ' ' << s.column_steps << ' ' << s.columns.size() << ' ' << s.rows.size() << ' '
        << s.hor_edges.size() << ' ' << s.ver_edges.size();
    if (k + 1 == refinement.states.size()) out << ' ' << to_string(refinement.stop);
    out << '\n';
    if (verbose) {
      write_list(out, "A", s.columns);
      write_list(out, "B", s.rows);
      write_edges(out, "EHOR", s.hor_edges);
      write_edges(out, "EVER", s.ver_edges);
    }
  }
  return out.str();
}

RefinementState parse_final_state(std::string_view text) {
  const auto lines = group_by_line(detail::tokenize(text));
  std::size_t last = lines.size();
  for (std::size_t k = 0; k < lines.size(); ++k)
    if (lines[k].tokens[0].text == "STEP") last = k;
  if (last == lines.size()) throw ParseError(1, "no STEP record found");

  const auto& head = lines[last].tokens;
  if (head.size() < 7) throw ParseError(lines[last].line, "malformed STEP record");
  RefinementState state;
  state.step = detail::to_uint(head[1]);
  state.column_steps = detail::to_uint(head[2]);
  const std::size_t sizes[4] = {detail::to_uint(head[3]), detail::to_uint(head[4]), detail::to_uint(head[5]),
                                detail::to_uint(head[6])};

  bool seen[4] = {false, false, false, false};
  for (std::size_t k = last + 1; k < lines.size(); ++k) {
    const auto& toks = lines[k].tokens;
    const auto key = toks[0].text;
    if (key == "A" || key == "B") {
      auto& target = key == "A" ? state.columns : state.rows;
      for (std::size_t t = 1; t < toks.size(); ++t) target.push_back(one_based(toks[t]));
      seen[key == "A" ? 0 : 1] = true;
    } else if (key == "EHOR" || key == "EVER") {
      if ((toks.size() - 1) % 3 != 0) throw ParseError(lines[k].line, "edge lists are 'x y colour' triples");
      auto& target = key == "EHOR" ? state.hor_edges : state.ver_edges;
      for (std::size_t t = 1; t < toks.size(); t += 3) {
        auto x = one_based(toks[t]);
        auto y = one_based(toks[t + 1]);
        if (x == y) throw ParseError(lines[k].line, "edge endpoints must differ");
        if (x > y) std::swap(x, y);
        target.push_back({x, y, static_cast<Colour>(detail::to_uint(toks[t + 2]))});
      }
      seen[key == "EHOR" ? 2 : 3] = true;
    } else {
      throw ParseError(lines[k].line, "unexpected record '" + std::string(key) + "'");
    }
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3]))
    throw ParseError(lines[last].line, "final STEP lacks member lists (dump with --verbose)");
  if (state.columns.size() != sizes[0] || state.rows.size() != sizes[1] || state.hor_edges.size() != sizes[2] ||
      state.ver_edges.size() != sizes[3])
    throw ParseError(lines[last].line, "member lists disagree with STEP sizes");
  return state;
}

}  // namespace gridramsey
