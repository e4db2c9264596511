#include "acsl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "acsl/errors.hpp"

namespace acsl {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_diagram, msg); }

constexpr int kSlotA = 0;
constexpr int kSlotB = 1;
constexpr int kSlotC = 2;
constexpr int kSlotD = 3;

// One strand through a crossing: the under strand joins slots a and c, the
// over strand joins b and d.
struct Strand {
  std::size_t crossing;
  bool under;
  int first_slot;   // a or b
  int second_slot;  // c or d
};

struct EdgePosition {
  std::size_t component;
  std::size_t index;
};

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components)
    : crossings_(std::move(crossings)), components_(std::move(components)) {
  // Edge -> (component, index in component order).
  std::unordered_map<int, EdgePosition> where;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].empty()) invalid("component " + std::to_string(j + 1) + " has no edges");
    for (std::size_t i = 0; i < components_[j].size(); ++i) {
      const int e = components_[j][i];
      if (e <= 0) invalid("edge labels must be positive, got " + std::to_string(e));
      if (!where.emplace(e, EdgePosition{j, i}).second) {
        invalid("edge " + std::to_string(e) + " listed in more than one component position");
      }
    }
  }

  std::unordered_map<int, int> occurrences;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    for (int e : crossings_[x].edges) {
      if (e <= 0) invalid("edge labels must be positive, got " + std::to_string(e));
      if (!where.contains(e)) {
        invalid("edge " + std::to_string(e) + " of crossing " + std::to_string(x + 1) +
                " belongs to no component");
      }
      ++occurrences[e];
    }
  }
  for (const auto& [e, pos] : where) {
    const int count = occurrences.contains(e) ? occurrences.at(e) : 0;
    const bool crossingless_unknot = count == 0 && components_[pos.component].size() == 1;
    if (count != 2 && !crossingless_unknot) {
      invalid("edge " + std::to_string(e) + " appears " + std::to_string(count) +
              " times across crossings, expected 2");
    }
  }

  // Group strands by component.
  std::vector<std::vector<Strand>> strands(components_.size());
  under_.resize(crossings_.size());
  over_.resize(crossings_.size());
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const auto& cr = crossings_[x];
    for (bool under : {true, false}) {
      const int s0 = under ? kSlotA : kSlotB;
      const int s1 = under ? kSlotC : kSlotD;
      const auto c0 = where.at(cr.edges[s0]).component;
      const auto c1 = where.at(cr.edges[s1]).component;
      if (c0 != c1) {
        invalid("crossing " + std::to_string(x + 1) + ": " + (under ? "under" : "over") +
                "-strand joins edges of different components");
      }
      strands[c0].push_back(Strand{x, under, s0, s1});
      (under ? under_ : over_)[x] = c0;
    }
  }

  signs_.assign(crossings_.size(), 0);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& edges = components_[j];
    const std::size_t m = edges.size();
    // incoming_slot[strand] is the slot holding the edge that enters along it.
    std::vector<int> incoming_slot(strands[j].size(), -1);

    auto index_of = [&](int e) { return where.at(e).index; };

    if (m == 1) {
      for (std::size_t s = 0; s < strands[j].size(); ++s) incoming_slot[s] = strands[j][s].first_slot;
    } else if (m == 2) {
      // Both strands join the same two edges; fix the one forced by an
      // under-crossing (a -> c), the other carries the opposite transition.
      if (strands[j].size() != 2) invalid("component " + std::to_string(j + 1) + " is not a closed cycle");
      std::array<std::optional<bool>, 2> forward;  // transition edges[0] -> edges[1]
      for (std::size_t s = 0; s < 2; ++s) {
        const auto& st = strands[j][s];
        const auto& cr = crossings_[st.crossing];
        if (cr.edges[st.first_slot] == cr.edges[st.second_slot]) {
          invalid("crossing " + std::to_string(st.crossing + 1) + ": strand closes on itself");
        }
        if (st.under) forward[s] = cr.edges[kSlotA] == edges[0];
      }
      if (forward[0] && forward[1] && *forward[0] == *forward[1]) {
        invalid("component " + std::to_string(j + 1) + ": under-strand orientations disagree");
      }
      if (!forward[0] && !forward[1]) forward[0] = true;
      if (!forward[0]) forward[0] = !*forward[1];
      if (!forward[1]) forward[1] = !*forward[0];
      for (std::size_t s = 0; s < 2; ++s) {
        const auto& st = strands[j][s];
        const int incoming = *forward[s] ? edges[0] : edges[1];
        incoming_slot[s] =
            crossings_[st.crossing].edges[st.first_slot] == incoming ? st.first_slot : st.second_slot;
      }
    } else {
      std::vector<bool> used(m, false);
      for (std::size_t s = 0; s < strands[j].size(); ++s) {
        const auto& st = strands[j][s];
        const auto& cr = crossings_[st.crossing];
        const std::size_t p = index_of(cr.edges[st.first_slot]);
        const std::size_t q = index_of(cr.edges[st.second_slot]);
        std::size_t from;
        if ((p + 1) % m == q) {
          from = p;
          incoming_slot[s] = st.first_slot;
        } else if ((q + 1) % m == p) {
          from = q;
          incoming_slot[s] = st.second_slot;
        } else {
          invalid("crossing " + std::to_string(st.crossing + 1) + ": edges " +
                  std::to_string(cr.edges[st.first_slot]) + " and " +
                  std::to_string(cr.edges[st.second_slot]) +
                  " are not consecutive in their component");
        }
        if (used[from]) {
          invalid("component " + std::to_string(j + 1) + ": edge " + std::to_string(edges[from]) +
                  " continues at more than one crossing");
        }
        used[from] = true;
      }
    }

    for (std::size_t s = 0; s < strands[j].size(); ++s) {
      const auto& st = strands[j][s];
      if (st.under) {
        if (incoming_slot[s] != kSlotA) {
          invalid("crossing " + std::to_string(st.crossing + 1) +
                  ": under-strand must enter at the first edge");
        }
      } else {
        signs_[st.crossing] = incoming_slot[s] == kSlotD ? +1 : -1;
      }
    }
  }

  // Closed curves in the plane meet an even number of times.
  std::map<std::pair<std::size_t, std::size_t>, int> between;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    if (under_[x] != over_[x]) ++between[std::minmax(under_[x], over_[x])];
  }
  for (const auto& [pair, count] : between) {
    if (count % 2 != 0) {
      invalid("components " + std::to_string(pair.first + 1) + " and " +
              std::to_string(pair.second + 1) + " cross an odd number of times (" +
              std::to_string(count) + ")");
    }
  }
}

int Diagram::sign(std::size_t crossing) const {
  if (crossing >= signs_.size()) {
    throw Error(ErrorKind::index, "crossing index " + std::to_string(crossing) +
                                      " out of range (" + std::to_string(signs_.size()) +
                                      " crossings)");
  }
  return signs_[crossing];
}

std::size_t Diagram::under_component(std::size_t crossing) const {
  if (crossing >= under_.size()) throw Error(ErrorKind::index, "crossing index out of range");
  return under_[crossing];
}

std::size_t Diagram::over_component(std::size_t crossing) const {
  if (crossing >= over_.size()) throw Error(ErrorKind::index, "crossing index out of range");
  return over_[crossing];
}

int crossing_sign(const Diagram& diagram, std::size_t crossing_index) {
  return diagram.sign(crossing_index);
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space(bool commas = false) {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || (commas && text_[pos_] == ','))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "PD text, offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Crossing scan_crossing(Scanner& in) {
  in.expect('X');
  in.skip_space();
  const char open = in.peek();
  if (open != '(' && open != '[') in.fail("expected '(' after X");
  in.expect(open);
  Crossing cr;
  for (int i = 0; i < 4; ++i) {
    if (i > 0) {
      in.skip_space();
      if (in.peek() != ',') in.fail("crossing needs exactly four edge labels");
      in.expect(',');
    }
    cr.edges[static_cast<std::size_t>(i)] = in.integer();
  }
  in.expect(open == '(' ? ')' : ']');
  return cr;
}

std::size_t find_component_block(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'C') continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == ':') return i;
  }
  return std::string_view::npos;
}

}  // namespace

std::vector<Crossing> parse_crossings(std::string_view text) {
  Scanner in(text);
  std::vector<Crossing> crossings;
  in.skip_space(true);
  while (!in.at_end()) {
    crossings.push_back(scan_crossing(in));
    in.skip_space(true);
  }
  return crossings;
}

Diagram parse_pd(std::string_view text) {
  const std::size_t block = find_component_block(text);
  if (block == std::string_view::npos) {
    throw Error(ErrorKind::parse, "PD text: missing component block 'C: ...'");
  }
  auto crossings = parse_crossings(text.substr(0, block));

  std::string_view rest = text.substr(block);
  rest.remove_prefix(rest.find(':') + 1);
  std::vector<std::vector<int>> components(1);
  Scanner in(rest);
  in.skip_space();
  while (!in.at_end()) {
    if (in.peek() == ';') {
      in.expect(';');
      components.emplace_back();
    } else {
      components.back().push_back(in.integer());
    }
    in.skip_space();
  }
  if (components.back().empty()) components.pop_back();
  if (components.empty()) throw Error(ErrorKind::parse, "PD text: component block is empty");
  for (const auto& c : components) {
    if (c.empty()) throw Error(ErrorKind::parse, "PD text: empty component between ';'");
  }
  return Diagram(std::move(crossings), std::move(components));
}

std::string to_pd_text(const Diagram& diagram) {
  std::ostringstream out;
  for (const auto& cr : diagram.crossings()) {
    out << "X(" << cr.a() << ',' << cr.b() << ',' << cr.c() << ',' << cr.d() << ") ";
  }
  out << "C:";
  bool first = true;
  for (const auto& comp : diagram.components()) {
    if (!first) out << ';';
    first = false;
    for (int e : comp) out << ' ' << e;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

FramedLink linking_matrix(const Diagram& diagram, const FramingSpec& framings) {
  const std::size_t n = diagram.component_count();
  if (const auto* explicit_framings = std::get_if<std::vector<std::int64_t>>(&framings)) {
    if (explicit_framings->size() != n) {
      throw Error(ErrorKind::invalid_argument,
                  "framings has " + std::to_string(explicit_framings->size()) +
                      " entries but the diagram has " + std::to_string(n) + " components");
    }
  }
  IntMatrix twice(n);
  IntMatrix writhe(n);
  for (std::size_t x = 0; x < diagram.crossing_count(); ++x) {
    const auto u = diagram.under_component(x);
    const auto o = diagram.over_component(x);
    const int s = diagram.sign(x);
    if (u == o) {
      writhe(u, u) += s;
    } else {
      twice(u, o) += s;
      twice(o, u) += s;
    }
  }
  IntMatrix linking(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (twice(i, j) % 2 != 0) {
        throw Error(ErrorKind::invalid_diagram, "half-integer linking number between components " +
                                                    std::to_string(i + 1) + " and " +
                                                    std::to_string(j + 1));
      }
      linking(i, j) = twice(i, j) / 2;
    }
    if (const auto* explicit_framings = std::get_if<std::vector<std::int64_t>>(&framings)) {
      linking(i, i) = (*explicit_framings)[i];
    } else {
      linking(i, i) = writhe(i, i);
    }
  }
  return make_link(std::move(linking), std::vector<std::int64_t>(n, 0));
}

Diagram mirror(const Diagram& diagram) {
  auto crossings = diagram.crossings();
  for (auto& cr : crossings) std::swap(cr.edges[kSlotB], cr.edges[kSlotD]);
  return Diagram(std::move(crossings), diagram.components());
}

Diagram reverse_component(const Diagram& diagram, std::size_t j) {
  if (j >= diagram.component_count()) {
    throw Error(ErrorKind::index, "component index " + std::to_string(j) + " out of range");
  }
  auto crossings = diagram.crossings();
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    if (diagram.under_component(x) == j) {
      auto& e = crossings[x].edges;
      e = {e[kSlotC], e[kSlotD], e[kSlotA], e[kSlotB]};
    }
  }
  auto components = diagram.components();
  std::reverse(components[j].begin(), components[j].end());
  return Diagram(std::move(crossings), std::move(components));
}

Diagram braid_closure(int strands, std::span<const int> word) {
  if (strands < 1) throw Error(ErrorKind::invalid_argument, "braid needs at least one strand");
  std::vector<int> position(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) position[static_cast<std::size_t>(p)] = p + 1;
  int next = strands + 1;

  struct Raw {
    int bl, br, tl, tr;
    bool positive;
  };
  std::vector<Raw> raw;
  for (int g : word) {
    const int i = (g > 0 ? g : -g) - 1;
    if (g == 0 || i + 1 >= strands) {
      throw Error(ErrorKind::invalid_argument,
                  "braid generator " + std::to_string(g) + " out of range for " +
                      std::to_string(strands) + " strands");
    }
    const auto ui = static_cast<std::size_t>(i);
    Raw r{position[ui], position[ui + 1], next, next + 1, g > 0};
    next += 2;
    position[ui] = r.tl;
    position[ui + 1] = r.tr;
    raw.push_back(r);
  }

  // Close up: the edge leaving the top at position p is the one entering the
  // bottom at position p.
  std::unordered_map<int, int> alias;
  for (int p = 0; p < strands; ++p) alias[position[static_cast<std::size_t>(p)]] = p + 1;
  auto canon = [&](int e) {
    auto it = alias.find(e);
    return it == alias.end() ? e : it->second;
  };

  // The strand entering bottom-left leaves top-right and vice versa.
  std::unordered_map<int, int> successor;
  for (auto& r : raw) {
    r = Raw{canon(r.bl), canon(r.br), canon(r.tl), canon(r.tr), r.positive};
    successor[r.bl] = r.tr;
    successor[r.br] = r.tl;
  }

  std::unordered_map<int, int> relabel;
  std::vector<std::vector<int>> components;
  int fresh = 1;
  for (int start = 1; start <= strands; ++start) {
    if (relabel.contains(start)) continue;
    components.emplace_back();
    int e = start;
    do {
      relabel[e] = fresh;
      components.back().push_back(fresh++);
      auto it = successor.find(e);
      e = it == successor.end() ? e : it->second;
    } while (!relabel.contains(e));
  }

  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (const auto& r : raw) {
    const int bl = relabel.at(r.bl), br = relabel.at(r.br);
    const int tl = relabel.at(r.tl), tr = relabel.at(r.tr);
    // Counterclockwise from bottom-left: BL, BR, TR, TL.
    if (r.positive) {
      crossings.push_back(Crossing{{br, tr, tl, bl}});  // under BR -> TL, over BL -> TR
    } else {
      crossings.push_back(Crossing{{bl, br, tr, tl}});  // under BL -> TR, over BR -> TL
    }
  }
  return Diagram(std::move(crossings), std::move(components));
}

}  // namespace acsl
