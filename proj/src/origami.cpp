#include "origami/origami.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace origami {

using json = nlohmann::ordered_json;

const char* to_string(SConvention c) {
  switch (c) {
    case SConvention::RotateCcw: return "ccw";
    case SConvention::RotateCw: return "cw";
    case SConvention::InvolutiveSwap: return "involutive";
  }
  return "?";
}

SConvention s_convention_from_string(const std::string& s) {
  if (s == "ccw") return SConvention::RotateCcw;
  if (s == "cw") return SConvention::RotateCw;
  if (s == "involutive") return SConvention::InvolutiveSwap;
  throw std::invalid_argument("unknown S-action convention: " + s +
                              " (expected ccw, cw or involutive)");
}

Origami make_origami(Perm a, Perm b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("origami: sigma_a and sigma_b must have equal degree");
  if (a.degree() < 1) throw std::invalid_argument("origami: degree must be >= 1");
  const Perm gens[2] = {a, b};
  if (!is_transitive(gens, a.degree()))
    throw std::invalid_argument("origami: the pair must act transitively");
  return Origami{std::move(a), std::move(b)};
}

int degree(const Origami& o) { return o.a.degree(); }

std::vector<int> stratum(const Origami& o) {
  const Perm c = commutator(o.b.inverse(), o.a.inverse());
  std::vector<int> alphas;
  for (int len : cycle_type(c))
    if (len >= 2) alphas.push_back(len - 1);
  return alphas;  // cycle_type is sorted already
}

int genus(const Origami& o) {
  const std::vector<int> s = stratum(o);
  return 1 + std::accumulate(s.begin(), s.end(), 0) / 2;
}

std::vector<int> cylinders(const Origami& o, Direction dir) {
  switch (dir) {
    case Direction::Horizontal: return cycle_type(o.a);
    case Direction::Vertical: return cycle_type(o.b);
    case Direction::Diagonal: return cycle_type(o.b * o.a);
  }
  throw std::logic_error("cylinders: bad direction");
}

Origami apply_generator(const Origami& o, Generator g, SConvention conv) {
  switch (g) {
    case Generator::T:
      return Origami{o.a, o.b * o.a.inverse()};
    case Generator::TInv:
      return Origami{o.a, o.b * o.a};
    case Generator::S:
      switch (conv) {
        case SConvention::RotateCcw: return Origami{o.b.inverse(), o.a};
        case SConvention::RotateCw: return Origami{o.b, o.a.inverse()};
        case SConvention::InvolutiveSwap: return Origami{o.b.inverse(), o.a.inverse()};
      }
      break;
    case Generator::SInv:
      switch (conv) {
        case SConvention::RotateCcw: return Origami{o.b, o.a.inverse()};
        case SConvention::RotateCw: return Origami{o.b.inverse(), o.a};
        case SConvention::InvolutiveSwap: return Origami{o.b.inverse(), o.a.inverse()};
      }
      break;
  }
  throw std::logic_error("apply_generator: bad generator");
}

Origami apply_word(const Origami& o, const Word& w, SConvention conv) {
  // Rightmost letter acts first.
  Origami cur = o;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == LetterKind::T) {
      // T^e: (a, b) -> (a, b a^-e) in one composition.
      cur = Origami{cur.a, cur.b * cur.a.pow(-it->exp)};
    } else {
      long long reps;
      Generator step;
      if (conv == SConvention::InvolutiveSwap) {
        reps = ((it->exp % 2) + 2) % 2;  // the involutive S squares to the identity map
        step = Generator::S;
      } else {
        reps = ((it->exp % 4) + 4) % 4;  // S has order 4 on pairs
        step = Generator::S;
      }
      for (long long k = 0; k < reps; ++k) cur = apply_generator(cur, step, conv);
    }
  }
  return cur;
}

Origami canonical_form(const Origami& o) {
  const int d = degree(o);
  const Perm a_inv = o.a.inverse();
  const Perm b_inv = o.b.inverse();
  const Perm* edges[4] = {&o.a, &a_inv, &o.b, &b_inv};

  std::vector<int> best;                 // concatenated images of (new_a, new_b)
  std::vector<int> relabel(static_cast<size_t>(d));
  std::vector<int> order(static_cast<size_t>(d));
  std::vector<int> cand(2 * static_cast<size_t>(d));

  for (int start = 0; start < d; ++start) {
    // BFS relabel: discovery order following a, a^-1, b, b^-1.
    std::fill(relabel.begin(), relabel.end(), -1);
    relabel[static_cast<size_t>(start)] = 0;
    order[0] = start;
    int found = 1;
    for (int head = 0; head < found; ++head) {
      const int x = order[static_cast<size_t>(head)];
      for (const Perm* e : edges) {
        const int y = (*e)(x);
        if (relabel[static_cast<size_t>(y)] < 0) {
          relabel[static_cast<size_t>(y)] = found;
          order[static_cast<size_t>(found)] = y;
          ++found;
        }
      }
    }
    for (int x = 0; x < d; ++x) {
      const size_t nx = static_cast<size_t>(relabel[static_cast<size_t>(x)]);
      cand[nx] = relabel[static_cast<size_t>(o.a(x))];
      cand[static_cast<size_t>(d) + nx] = relabel[static_cast<size_t>(o.b(x))];
    }
    if (best.empty() || cand < best) best = cand;
  }

  std::vector<int> ia(best.begin(), best.begin() + d);
  std::vector<int> ib(best.begin() + d, best.end());
  return Origami{Perm::from_images(std::move(ia)), Perm::from_images(std::move(ib))};
}

uint64_t origami_hash(const Origami& o) {
  const Origami c = canonical_form(o);
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(degree(o)));
  for (int v : c.a.images()) mix(static_cast<uint64_t>(v));
  for (int v : c.b.images()) mix(static_cast<uint64_t>(v));
  return h;
}

Reducedness is_reduced_sufficient(const Origami& o) {
  const int d = degree(o);
  if (d == 1) return Reducedness::Reduced;

  const Perm c = commutator(o.b.inverse(), o.a.inverse());
  std::vector<char> singular(static_cast<size_t>(d), 0);
  bool any = false;
  for (int x = 0; x < d; ++x) {
    if (c(x) != x) {
      singular[static_cast<size_t>(x)] = 1;
      any = true;
    }
  }
  if (!any) return Reducedness::Undetermined;

  // gcd of gaps between consecutive singular corners along each cycle of p;
  // a cycle with no singular square contributes nothing.
  auto gap_gcd = [&](const Perm& p) {
    long long g = 0;
    std::vector<char> seen(static_cast<size_t>(d), 0);
    for (int start = 0; start < d; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      std::vector<int> cyc;
      int x = start;
      do {
        seen[static_cast<size_t>(x)] = 1;
        cyc.push_back(x);
        x = p(x);
      } while (x != start);
      std::vector<int> marks;
      for (size_t i = 0; i < cyc.size(); ++i)
        if (singular[static_cast<size_t>(cyc[i])]) marks.push_back(static_cast<int>(i));
      if (marks.empty()) continue;
      const int len = static_cast<int>(cyc.size());
      for (size_t i = 0; i < marks.size(); ++i) {
        const int next = marks[(i + 1) % marks.size()];
        int gap = (next - marks[i] + len) % len;
        if (gap == 0) gap = len;  // single singular corner: one full loop
        g = std::gcd(g, static_cast<long long>(gap));
      }
    }
    return g;
  };

  const long long gh = gap_gcd(o.a);
  const long long gv = gap_gcd(o.b);
  return (gh == 1 && gv == 1) ? Reducedness::Reduced : Reducedness::Undetermined;
}

std::string to_text(const Origami& o) {
  return std::to_string(degree(o)) + "; sigma_a=" + o.a.to_cycles() +
         "; sigma_b=" + o.b.to_cycles();
}

Origami origami_from_text(const std::string& text) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("origami text: " + why);
  };
  const size_t semi1 = text.find(';');
  if (semi1 == std::string::npos) fail("expected 'd; sigma_a=...; sigma_b=...'");
  int d = 0;
  try {
    d = std::stoi(text.substr(0, semi1));
  } catch (const std::exception&) {
    fail("bad degree");
  }
  if (d < 1) fail("degree must be >= 1");
  const size_t semi2 = text.find(';', semi1 + 1);
  if (semi2 == std::string::npos) fail("missing sigma_b");
  auto field = [&](size_t from, size_t to, const std::string& name) {
    std::string part = text.substr(from, to - from);
    const size_t eq = part.find('=');
    if (eq == std::string::npos || part.find(name) == std::string::npos)
      fail("expected " + name + "=(...)");
    return part.substr(eq + 1);
  };
  const Perm a = Perm::from_cycles(field(semi1 + 1, semi2, "sigma_a"), d);
  const Perm b = Perm::from_cycles(field(semi2 + 1, text.size(), "sigma_b"), d);
  return make_origami(a, b);
}

std::string to_json_text(const Origami& o) {
  json j;
  j["d"] = degree(o);
  auto images1 = [](const Perm& p) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) v.push_back(p(i) + 1);
    return v;
  };
  j["sigma_a"] = images1(o.a);
  j["sigma_b"] = images1(o.b);
  return j.dump(2);
}

Origami origami_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("origami json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("sigma_a") || !j.contains("sigma_b"))
    throw std::invalid_argument("origami json: expected keys d, sigma_a, sigma_b");
  const int d = j.at("d").get<int>();
  auto perm_of = [&](const char* key) {
    std::vector<int> v = j.at(key).get<std::vector<int>>();
    if (static_cast<int>(v.size()) != d)
      throw std::invalid_argument(std::string("origami json: ") + key + " must have d entries");
    for (int& x : v) {
      if (x < 1 || x > d)
        throw std::invalid_argument(std::string("origami json: ") + key + " entries are 1-based");
      x -= 1;
    }
    return Perm::from_images(std::move(v));
  };
  return make_origami(perm_of("sigma_a"), perm_of("sigma_b"));
}

}  // namespace origami
