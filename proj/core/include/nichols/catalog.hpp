#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/weyl.hpp"

namespace nichols {

struct catalog_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unknown_label_error : catalog_error {
    using catalog_error::catalog_error;
};
struct not_finite_type_error : catalog_error {
    using catalog_error::catalog_error;
};

/// Parameters of a catalog instance, e.g. "theta=3,N=5" or "t=1,point=a2".
/// J-sets use '+' between vertices: "J=1+3".
struct CatalogParams {
    std::map<std::string, std::string> kv;

    static CatalogParams parse(const std::string& spec);
    std::string str() const;

    std::optional<std::string> get(const std::string& key) const;
    std::optional<std::int64_t> get_int(const std::string& key) const;
    std::vector<int> get_set(const std::string& key) const;  // empty if absent
    void set(const std::string& key, const std::string& value) { kv[key] = value; }
    void set_int(const std::string& key, std::int64_t v) { kv[key] = std::to_string(v); }
};

/// Compressed root notation "1^2 2^3 3" -> vector.
Root parse_compressed_root(const std::string& text, int theta);

struct ExpectedPoint {
    std::optional<std::string> dim;  // decimal digits, or "inf"
    std::optional<int> gk;
    std::optional<Root> ya;
    std::optional<std::vector<Root>> cartan_roots;
    std::optional<std::vector<Root>> roots;
};

struct Expected {
    std::optional<int> n_points;
    std::optional<int> n_positive_roots;
    std::optional<std::string> isotropy_order;
    std::optional<std::string> lie_type;          // at the base point, e.g. "A1xA1"
    std::optional<std::string> dim_all_points;    // every point must have this dimension
    std::optional<int> gk;                        // GK-dimension when infinite
    std::map<std::string, ExpectedPoint> per_point;
};

struct BuiltPoint {
    std::string name;
    BraidingMatrix matrix;
};

struct VerifyReport {
    std::string label;
    std::string params;
    bool match = true;
    std::vector<std::string> checks;      // "ok: ..." lines
    std::vector<std::string> mismatches;  // "FAIL: ..." lines
};

struct RecognitionHit {
    std::string label;
    std::string params;
    std::string point;
    bool operator==(const RecognitionHit&) const = default;
};

class Catalog {
  public:
    /// Loads the family data shipped in data/catalog (NICHOLS_DATA_DIR overrides).
    static Catalog& instance();
    explicit Catalog(const std::string& data_dir);

    std::vector<std::string> labels() const;
    bool has(const std::string& label) const;

    /// Diagram at the named point (params key "point", default base point).
    BuiltPoint build_diagram(const std::string& label, const CatalogParams& params) const;
    /// All named points this label+params can build directly.
    std::vector<BuiltPoint> build_all_points(const std::string& label, const CatalogParams& params) const;

    Expected expected(const std::string& label, const CatalogParams& params) const;

    VerifyReport verify(const std::string& label, const CatalogParams& params) const;

    struct Instance {
        std::string label;
        std::string params;
    };
    /// The curated verification set (fixtures for every family).
    std::vector<Instance> default_instances() const;

    /// All catalog instances whose bundle contains the given twist class,
    /// scanning parameter instantiations over roots of unity occurring in q.
    std::vector<RecognitionHit> recognize(const BraidingMatrix& q,
                                          const EnumerationCaps& caps = {}) const;

    ~Catalog();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Restrict the root pairing to the Cartan roots at x, extract the simple
/// ones, classify the resulting Cartan matrix against the finite types.
/// Returns e.g. "A2xA1", or "0" when there are no Cartan roots.
std::string cartan_subsystem_type(const GroupoidBundle& b, int x);

/// Finite-type classification of a GCM given as full matrix (row-major),
/// factors sorted; throws not_finite_type_error.
std::string classify_finite_cartan(const std::vector<int>& c, int rank);

}  // namespace nichols
