#include "kflag/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "kflag/parallel.hpp"

namespace kflag {

namespace {

json int_to_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();  // decimal string beyond 64 bits
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

constexpr int kCacheSchema = 1;

}  // namespace

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({json(e), int_to_json(c)}));
  return out;
}

LaurentPoly laurent_from_json(const json& j, int rank) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    Expo e = t.at(0).get<Expo>();
    if (static_cast<int>(e.size()) != rank) throw ConfigError("bad exponent vector in cache");
    terms.emplace_back(std::move(e), int_from_json(t.at(1)));
  }
  return LaurentPoly::from_terms(rank, std::move(terms));
}

json ypoly_to_json(const YPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms) out.push_back(json::array({json(e), int_to_json(c)}));
  return out;
}

json report_to_json(const PositivityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"kind", x.kind},
                 {"u", x.u},
                 {"v", x.v},
                 {"w", x.w},
                 {"coefficient", laurent_to_json(x.coefficient)},
                 {"residual", laurent_to_json(x.residual)},
                 {"note", x.note}});
  }
  json out{{"claim", r.claim},
           {"group", r.group},
           {"parabolic", r.parabolic},
           {"instances", r.instances_checked},
           {"status", r.pass() ? "pass" : "fail"},
           {"violations", v}};
  if (!r.fault_note.empty()) out["fault"] = r.fault_note;
  return out;
}

json build_table(const KRing& k, Basis basis, const std::vector<int>& parabolic_1based,
                 int degree_cap, int jobs) {
  k.warm_up();
  const WeylGroup& W = k.weyl();
  std::vector<int> parabolic;
  for (int i : parabolic_1based) parabolic.push_back(i - 1);
  std::vector<WeylElt> index =
      parabolic.empty() ? W.elements() : W.minimal_coset_reps(parabolic);
  const std::size_t P = index.size();
  const bool signed_y = basis == Basis::o_upper || basis == Basis::xi_upper;
  const bool pos_y = basis == Basis::dualizing;

  std::vector<json> rows(P * P);
  parallel_for(P * P, jobs, [&](std::size_t pi) {
    WeylElt u = index[pi / P], v = index[pi % P];
    Expansion e = k.structure_constants(u, v, basis);
    if (!parabolic.empty()) e = k.parabolic_reduce(e, parabolic);
    json constants = json::object();
    const int cap = degree_cap > 0
                        ? degree_cap
                        : W.length(u) + W.length(v) +
                              static_cast<int>(k.roots().positive_roots().size());
    for (WeylElt w : W.elements()) {
      const LaurentPoly& c = e.coeff[w.id];
      if (c.is_zero()) continue;
      json entry{{"laurent", laurent_to_json(c)}};
      if (signed_y || pos_y) {
        int parity =
            signed_y ? (((W.length(w) - W.length(u) - W.length(v)) % 2) + 2) % 2 : 0;
        LaurentPoly x = to_root_x_coords(c, k.roots());
        if (pos_y) x = x.invert_exponents();
        YExpansion ye =
            expand_in_y(parity ? -x : x, std::max(cap, static_cast<int>(x.max_coordinate())));
        entry["grading_sign"] = parity ? -1 : 1;
        if (ye.member)
          entry["y_poly"] = ypoly_to_json(ye.poly);
        else
          entry["y_residual"] = laurent_to_json(ye.residual);
      }
      constants[word_str(W, w)] = std::move(entry);
    }
    rows[pi] = json{{"u_word", word_str(W, u)}, {"v_word", word_str(W, v)},
                    {"constants", std::move(constants)}};
  });

  json out = json::array();
  for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

std::string table_to_csv(const json& table) {
  std::ostringstream os;
  os << "u,v,w,laurent,y_poly,grading_sign\n";
  auto flat = [](const json& j) {
    std::string s = j.dump();
    std::string out;
    out.reserve(s.size());
    for (char c : s) out += (c == ',') ? ';' : c;
    return out;
  };
  for (const auto& row : table) {
    for (auto it = row.at("constants").begin(); it != row.at("constants").end(); ++it) {
      const json& e = it.value();
      os << row.at("u_word").get<std::string>() << ',' << row.at("v_word").get<std::string>()
         << ',' << it.key() << ',' << flat(e.at("laurent")) << ','
         << (e.contains("y_poly") ? flat(e.at("y_poly")) : std::string()) << ','
         << (e.contains("grading_sign") ? std::to_string(e.at("grading_sign").get<int>())
                                        : std::string())
         << '\n';
    }
  }
  return os.str();
}

std::string cache_path(const KRing& k, const std::string& dir) {
  return dir + "/kflag-cache-" + k.roots().name() + ".json";
}

bool save_cache(const KRing& k, const std::string& dir) {
  k.warm_up();
  const WeylGroup& W = k.weyl();
  json o = json::object(), x = json::object(), words = json::array();
  for (WeylElt w : W.elements()) {
    words.push_back(word_str(W, w));
    json orow = json::array(), xrow = json::array();
    for (WeylElt v : W.elements()) {
      orow.push_back(laurent_to_json(k.schubert(w).r[v.id]));
      xrow.push_back(laurent_to_json(k.xi(w).r[v.id]));
    }
    o[word_str(W, w)] = std::move(orow);
    x[word_str(W, w)] = std::move(xrow);
  }
  json cache{{"schema", kCacheSchema},
             {"type", to_string(k.roots().type())},
             {"rank", k.roots().rank()},
             {"words_hash", W.words_hash()},
             {"words", words},
             {"o_lower", o},
             {"xi_lower", x}};
  std::ofstream f(cache_path(k, dir), std::ios::binary);
  if (!f) return false;
  f << cache.dump(1) << "\n";
  return static_cast<bool>(f);
}

bool load_cache(const KRing& k, const std::string& dir) {
  std::ifstream f(cache_path(k, dir), std::ios::binary);
  if (!f) return false;
  json cache;
  try {
    f >> cache;
    if (cache.at("schema") != kCacheSchema) return false;
    if (cache.at("type") != to_string(k.roots().type())) return false;
    if (cache.at("rank") != k.roots().rank()) return false;
    if (cache.at("words_hash") != k.weyl().words_hash()) return false;
    const WeylGroup& W = k.weyl();
    std::vector<KClass> o(W.size()), x(W.size());
    for (WeylElt w : W.elements()) {
      const json& orow = cache.at("o_lower").at(word_str(W, w));
      const json& xrow = cache.at("xi_lower").at(word_str(W, w));
      o[w.id].r.resize(W.size());
      x[w.id].r.resize(W.size());
      for (WeylElt v : W.elements()) {
        o[w.id].r[v.id] = laurent_from_json(orow.at(v.id), k.roots().rank());
        x[w.id].r[v.id] = laurent_from_json(xrow.at(v.id), k.roots().rank());
      }
    }
    k.adopt_tables(std::move(o), std::move(x));
  } catch (const json::exception&) {
    return false;
  } catch (const ConfigError&) {
    return false;
  }
  return true;
}

SubtorusBasis read_subtorus_file(const std::string& path, int rank) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open subtorus file '" + path + "'");
  IMatrix m;
  std::string line;
  while (std::getline(f, line)) {
    std::istringstream ls(line);
    Expo row;
    long v;
    while (ls >> v) row.push_back(static_cast<Coord>(v));
    if (!ls.eof() && ls.fail()) throw ConfigError("subtorus file has a non-integer entry");
    if (row.empty()) continue;
    if (static_cast<int>(row.size()) != rank)
      throw ConfigError("subtorus row has " + std::to_string(row.size()) +
                        " entries; expected rank " + std::to_string(rank));
    m.push_back(std::move(row));
  }
  return SubtorusBasis{std::move(m)};
}

}  // namespace kflag
