#include "hitproblem/hit.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>

namespace hitp {

namespace {

void require_even(u64 n) {
  if (n % 2) throw std::invalid_argument("topological degree must be even");
}

}  // namespace

void for_each_hit_generator(u32 p, u32 h, u64 n,
                            const std::function<void(u32, const Monomial&, const Polynomial&)>& fn) {
  require_odd_prime(p);
  require_even(n);
  // Source polynomial degree n/2 - k(p-1) must be >= k, i.e. k <= n/(2p).
  u64 kmax = n / (2 * static_cast<u64>(p));
  for (u64 k = 1; k <= kmax; ++k) {
    u64 src_deg = n - 2 * k * (p - 1);
    for (const Monomial& m : enumerate_monomials(h, src_deg)) {
      Polynomial img = reduced_power(m, static_cast<u32>(k), p, h);
      if (!img.is_zero()) fn(static_cast<u32>(k), m, img);
    }
  }
}

std::vector<Polynomial> hit_generators(u32 p, u32 h, u64 n) {
  std::vector<Polynomial> out;
  for_each_hit_generator(p, h, n, [&](u32, const Monomial&, const Polynomial& img) {
    out.push_back(img);
  });
  return out;
}

QuotientPresentation compute_quotient(u32 p, u32 h, u64 n) {
  require_odd_prime(p);
  require_even(n);
  QuotientPresentation q;
  q.p = p;
  q.h = h;
  q.n = n;
  q.ambient = enumerate_monomials(h, n);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < q.ambient.size(); ++i) index.emplace(q.ambient[i], i);

  RowReducer red(p, q.ambient.size());
  bool full = false;
  for_each_hit_generator(p, h, n, [&](u32, const Monomial&, const Polynomial& img) {
    if (full) return;
    std::vector<u32> row(q.ambient.size(), 0);
    for (const auto& [m, c] : img.terms()) row[index.at(m)] = c;
    red.add_row(std::move(row));
    full = red.rank() == q.ambient.size();
  });
  q.hit_basis = red.to_matrix();
  q.pivot_cols = red.pivot_cols();
  std::size_t pi = 0;
  for (std::size_t c = 0; c < q.ambient.size(); ++c) {
    if (pi < q.pivot_cols.size() && q.pivot_cols[pi] == c) {
      ++pi;
    } else {
      q.quotient_cols.push_back(c);
      q.quotient_monomials.push_back(q.ambient[c]);
    }
  }
  return q;
}

namespace {

using CacheKey = std::tuple<u32, u32, u64>;
std::mutex g_cache_mutex;
std::map<CacheKey, QuotientPtr> g_cache;

nlohmann::ordered_json quotient_to_json(const QuotientPresentation& q) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["p"] = q.p;
  j["h"] = q.h;
  j["n"] = q.n;
  j["pivot_cols"] = q.pivot_cols;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < q.hit_basis.rows; ++i) rows.push_back(q.hit_basis.row(i));
  j["hit_basis"] = std::move(rows);
  return j;
}

std::optional<QuotientPresentation> quotient_from_json(u32 p, u32 h, u64 n,
                                                       const nlohmann::ordered_json& j) {
  if (j.value("schema_version", 0) != 1 || j.value("p", 0u) != p || j.value("h", 0u) != h ||
      j.value("n", u64{0}) != n)
    return std::nullopt;
  QuotientPresentation q;
  q.p = p;
  q.h = h;
  q.n = n;
  q.ambient = enumerate_monomials(h, n);
  q.pivot_cols = j.at("pivot_cols").get<std::vector<std::size_t>>();
  const auto& rows = j.at("hit_basis");
  q.hit_basis = FpMatrix(p, rows.size(), q.ambient.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i].get<std::vector<u32>>();
    if (r.size() != q.ambient.size()) return std::nullopt;
    std::copy(r.begin(), r.end(),
              q.hit_basis.a.begin() + static_cast<std::ptrdiff_t>(i * q.hit_basis.cols));
  }
  std::size_t pi = 0;
  for (std::size_t c = 0; c < q.ambient.size(); ++c) {
    if (pi < q.pivot_cols.size() && q.pivot_cols[pi] == c) {
      ++pi;
    } else {
      q.quotient_cols.push_back(c);
      q.quotient_monomials.push_back(q.ambient[c]);
    }
  }
  return q;
}

std::filesystem::path disk_cache_file(u32 p, u32 h, u64 n, const char* dir) {
  return std::filesystem::path(dir) /
         ("quotient_p" + std::to_string(p) + "_h" + std::to_string(h) + "_n" + std::to_string(n) +
          ".json");
}

}  // namespace

QuotientPtr quotient(u32 p, u32 h, u64 n) {
  CacheKey key{p, h, n};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  const char* dir = std::getenv("HITP_CACHE_DIR");
  if (dir && *dir) {
    std::ifstream in(disk_cache_file(p, h, n, dir));
    if (in) {
      try {
        auto j = nlohmann::ordered_json::parse(in);
        if (auto q = quotient_from_json(p, h, n, j)) {
          auto ptr = std::make_shared<const QuotientPresentation>(std::move(*q));
          std::lock_guard<std::mutex> lock(g_cache_mutex);
          return g_cache.emplace(key, ptr).first->second;
        }
      } catch (const nlohmann::json::exception&) {
        // fall through and recompute
      }
    }
  }
  auto ptr = std::make_shared<const QuotientPresentation>(compute_quotient(p, h, n));
  if (dir && *dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto final_path = disk_cache_file(p, h, n, dir);
    auto tmp_path = final_path;
    tmp_path += ".tmp";
    std::ofstream out(tmp_path);
    if (out) {
      out << quotient_to_json(*ptr).dump(2) << '\n';
      out.close();
      std::filesystem::rename(tmp_path, final_path, ec);
    }
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.emplace(key, ptr).first->second;  // idempotent on races
}

std::vector<u32> reduce(const Polynomial& f, const QuotientPresentation& q) {
  if (f.p() != q.p || f.vars() != q.h)
    throw std::invalid_argument("reduce: (p, h) mismatch with quotient");
  if (!f.is_zero() && (!f.is_homogeneous() || f.topdeg() != q.n))
    throw std::invalid_argument("reduce: polynomial degree does not match quotient degree");
  std::vector<u32> v = coordinates(f, q.ambient);
  // Eliminate pivot columns with the RREF rows; what remains is supported on
  // the quotient columns only.
  for (std::size_t i = 0; i < q.hit_basis.rows; ++i) {
    std::size_t c = q.pivot_cols[i];
    u32 coef = v[c];
    if (!coef) continue;
    u32 neg = q.p - coef;
    for (std::size_t j = c; j < q.hit_basis.cols; ++j) {
      u32 b = q.hit_basis.at(i, j);
      if (b) v[j] = add_mod(v[j], mul_mod(neg, b, q.p), q.p);
    }
  }
  std::vector<u32> residue(q.quotient_cols.size(), 0);
  for (std::size_t i = 0; i < q.quotient_cols.size(); ++i) residue[i] = v[q.quotient_cols[i]];
  return residue;
}

HitReport is_hit(const Polynomial& f, const QuotientPresentation& q) {
  HitReport report(f);
  report.residue = reduce(f, q);
  bool zero = true;
  for (u32 c : report.residue)
    if (c) zero = false;
  if (!zero) {
    report.hit = false;
    return report;
  }
  report.hit = true;
  HitDecomposition witness(q.p, q.h);
  witness.target = f;
  if (!f.is_zero()) {
    // Solve for coefficients on the generating set P^k(m).
    std::vector<std::pair<u32, Monomial>> sources;
    std::vector<Polynomial> images;
    for_each_hit_generator(q.p, q.h, q.n, [&](u32 k, const Monomial& m, const Polynomial& img) {
      sources.emplace_back(k, m);
      images.push_back(img);
    });
    FpMatrix a(q.p, q.ambient.size(), images.size());
    std::map<Monomial, std::size_t, GrevlexGreater> index;
    for (std::size_t i = 0; i < q.ambient.size(); ++i) index.emplace(q.ambient[i], i);
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [m, c] : images[j].terms()) a.at(index.at(m), j) = c;
    auto x = solve(a, coordinates(f, q.ambient));
    if (!x) throw std::logic_error("zero residue but no generator combination; engine bug");
    for (std::size_t j = 0; j < sources.size(); ++j) {
      if (!(*x)[j]) continue;
      auto [k, m] = sources[j];
      auto it = witness.parts.find(k);
      if (it == witness.parts.end())
        it = witness.parts.emplace(k, Polynomial(q.p, q.h)).first;
      it->second.add_term(m, (*x)[j]);
    }
    // Drop parts that cancelled to zero.
    for (auto it = witness.parts.begin(); it != witness.parts.end();)
      it = it->second.is_zero() ? witness.parts.erase(it) : std::next(it);
  }
  if (!witness.verify()) throw std::logic_error("hit witness failed re-evaluation; engine bug");
  report.witness = std::move(witness);
  return report;
}

}  // namespace hitp
