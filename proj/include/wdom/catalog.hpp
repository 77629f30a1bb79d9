#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdom/weights.hpp"

namespace wdom {

/// Names one graph parameter: gamma_w (plain) or gamma_w^s (secure).
struct ParamSpec {
    WeightVector w;
    bool secure = false;

    std::string name() const { return (secure ? "secure(" : "plain(") + w.to_string() + ")"; }
    bool operator==(const ParamSpec& o) const { return secure == o.secure && w == o.w; }
};

/// Classification of a factor graph H by the quantities that select the
/// product-theorem cases.
struct HClass {
    int gamma = 0;                     // domination number
    int secure_domination = 0;         // secure(1,0) value
    std::optional<int> secure_total;   // secure(1,1) value; empty = none exists / not computed
    bool complete = false;
    bool nontrivial = false;
};

enum class FormulaKind { Equal, Bounds };

/// Dispatch outcome: the product parameter equals `target` evaluated on G,
/// or lies between `target` and `upper`.
struct FormulaResult {
    FormulaKind kind = FormulaKind::Equal;
    ParamSpec target;
    std::optional<ParamSpec> upper;
    std::string provenance;  // catalog case id, e.g. "thm3.4(iv)"
    std::string validity;
};

/// Query outside a formula's stated validity domain.
class DomainError : public std::runtime_error {
public:
    DomainError(const std::string& what, int min_supported)
        : std::runtime_error(what), min_supported_(min_supported) {}
    int min_supported() const { return min_supported_; }

private:
    int min_supported_;
};

enum class ProductFamily { SecureDomination, WeakRoman, SecureTotal };

/// Left-hand product parameter of a family: secure(1,0), secure(1,0,0) or
/// secure(1,1).
ParamSpec product_parameter(ProductFamily family);

FormulaResult classify_case_secure_domination(const HClass& h);
FormulaResult classify_case_weak_roman(const HClass& h);
FormulaResult classify_case_secure_total(const HClass& h);
FormulaResult classify_case(ProductFamily family, const HClass& h);

/// Closed forms for atomic parameters of paths and cycles. Throws
/// DomainError (carrying the smallest supported n) outside the stated
/// validity domain and std::invalid_argument for parameters without a
/// catalog entry.
int path_value(const ParamSpec& p, int n);
int cycle_value(const ParamSpec& p, int n);
bool has_path_formula(const ParamSpec& p);
bool has_cycle_formula(const ParamSpec& p);
int path_formula_min_n(const ParamSpec& p);
int cycle_formula_min_n(const ParamSpec& p);

/// Closed forms for the product parameter over P_n o H / C_n o H given the
/// class of H.
int path_product_value(ProductFamily family, const HClass& h, int n);
int cycle_product_value(ProductFamily family, const HClass& h, int n);

enum class MultipartiteShape { Complete, Star, K2n, K3n, Knr };

/// Product parameter over K_n, K_{1,n-1}, K_{2,n}, K_{3,n} or K_{n,r}
/// composed with H, from the corollary tables; sizes are validated against
/// the stated ranges.
int multipartite_value(ProductFamily family, MultipartiteShape shape, int n, int r, const HClass& h);

/// One verified parameter fact: a concrete graph expression, the
/// parameter, and its value.
struct FactEntry {
    std::string graph_expr;
    ParamSpec param;
    int value = 0;
    std::string citation;
    bool external_source = false;  // value carried in from cited work
    bool slow = false;             // large product; verify only with a generous budget
    std::string note;
};

/// Every atomic parameter fact in the catalog, instantiated at concrete
/// sizes (multipartite families are sampled at several sizes).
const std::vector<FactEntry>& fact_table();

/// Machine-readable catalog export; formulas are instantiated over their
/// domain up to n = 15.
std::string catalog_csv();
std::string catalog_json();

}  // namespace wdom
