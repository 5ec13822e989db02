#include "refdefect/io.hpp"

#include <fstream>
#include <sstream>

namespace refdefect {

using nlohmann::json;

nlohmann::json jordan_to_json(const JordanSpec& spec) {
  json blocks = json::array();
  for (const JordanBlock& b : spec.blocks)
    blocks.push_back(json{{"eig", to_string(b.eig)}, {"size", b.size}});
  return json{{"blocks", blocks}};
}

JordanSpec jordan_from_json(const json& j) {
  try {
    JordanSpec spec;
    for (const json& b : j.at("blocks")) {
      int size = b.at("size").get<int>();
      if (size < 1) throw ConfigError("Jordan block size must be a positive integer");
      spec.blocks.push_back({parse_scalar(b.at("eig").get<std::string>()), size});
    }
    if (spec.blocks.empty()) throw ConfigError("Jordan spec must have at least one block");
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed Jordan spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed Jordan spec: ") + e.what());
  }
}

nlohmann::json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  try {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
      throw ConfigError("matrix must be a nonempty array of nonempty rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(j[i].size()) != cols) throw ConfigError("matrix rows have mixed lengths");
      for (int c = 0; c < cols; ++c) m.at(i, c) = parse_scalar(j[i][c].get<std::string>());
    }
    return m;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed matrix: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed matrix: ") + e.what());
  }
}

nlohmann::json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const Mat& b : s.basis()) basis.push_back(mat_to_json(b));
  return json{{"ambient_rows", s.ambient_rows()},
              {"ambient_cols", s.ambient_cols()},
              {"basis", basis}};
}

Subspace subspace_from_json(const json& j) {
  try {
    int m = j.at("ambient_rows").get<int>();
    int n = j.at("ambient_cols").get<int>();
    if (m < 1 || n < 1) throw ConfigError("ambient shape must be positive");
    std::vector<Mat> mats;
    for (const json& mj : j.at("basis")) mats.push_back(mat_from_json(mj));
    return Subspace::span(m, n, mats);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed subspace: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed subspace: ") + e.what());
  }
}

nlohmann::json report_to_json(const DefectReport& rep) {
  json j{{"case_id", rep.case_id},
         {"family", family_name(rep.family)},
         {"a", jordan_to_json(rep.a)},
         {"b", jordan_to_json(rep.b)},
         {"k", rep.k},
         {"dim_image", rep.dim_image},
         {"dim_refk", rep.dim_refk_exact},
         {"rd_formula", rep.rd_formula},
         {"rd_exact", rep.rd_exact},
         {"agree", rep.agree},
         {"elapsed_ms", rep.elapsed_ms}};
  j["primal_dim"] = rep.primal_dim ? json(*rep.primal_dim) : json(nullptr);
  return j;
}

namespace {

std::uint64_t seed_from(const json& j, std::uint64_t default_seed) {
  if (j.contains("seed")) return j.at("seed").get<std::uint64_t>();
  return default_seed;
}

}  // namespace

CaseConfig case_config_from_json(const json& j, std::uint64_t default_seed) {
  try {
    CaseConfig cfg;
    cfg.family = family_from_name(j.at("family").get<std::string>());
    cfg.a = jordan_from_json(j.at("a"));
    cfg.b = jordan_from_json(j.at("b"));
    if (cfg.a.dim() != cfg.b.dim())
      throw ConfigError("case config requires a and b of equal total size");
    const json& kj = j.at("k");
    if (kj.is_number_integer()) {
      cfg.ks.push_back(kj.get<int>());
    } else {
      for (const json& v : kj) cfg.ks.push_back(v.get<int>());
    }
    if (cfg.ks.empty()) throw ConfigError("k list must be nonempty");
    for (int k : cfg.ks)
      if (k < 1) throw ConfigError("k values must be >= 1");
    cfg.with_primal = j.value("with_primal", false);
    cfg.budget = j.value("budget", 300);
    if (cfg.budget < 1) throw ConfigError("budget must be >= 1");
    cfg.seed = seed_from(j, default_seed);
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed case config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed case config: ") + e.what());
  }
}

SweepConfig sweep_config_from_json(const json& j, std::uint64_t default_seed) {
  try {
    SweepConfig cfg;
    cfg.n_max = j.at("n_max").get<int>();
    // Matricizations are n^2 x n^2 exact-rational matrices; n_max 8 keeps the
    // largest eliminations at 64 x 64.
    if (cfg.n_max < 1 || cfg.n_max > 8) throw ConfigError("n_max must be in 1..8");
    for (const json& s : j.at("eigen_pool")) cfg.eigen_pool.push_back(parse_scalar(s.get<std::string>()));
    if (cfg.eigen_pool.empty()) throw ConfigError("eigen_pool must be nonempty");
    for (const json& f : j.at("families")) cfg.families.push_back(family_from_name(f.get<std::string>()));
    if (cfg.families.empty()) throw ConfigError("families must be nonempty");
    cfg.k_max = j.at("k_max").get<int>();
    if (cfg.k_max < 1) throw ConfigError("k_max must be >= 1");
    cfg.seed = seed_from(j, default_seed);
    cfg.jobs = j.value("jobs", 1);
    if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
    cfg.with_primal = j.value("with_primal", false);
    cfg.budget = j.value("budget", 300);
    if (cfg.budget < 1) throw ConfigError("budget must be >= 1");
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed sweep config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed sweep config: ") + e.what());
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("cannot parse JSON in " + path + ": " + e.what());
  }
}

}  // namespace refdefect
