#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hess/errors.hpp"
#include "hess/numeric.hpp"

namespace hess {

// Simple types A..G with Bourbaki numbering of the simple roots.
struct CartanType {
    char family = 'A';
    int rank = 1;

    // Admissible pairs: A r>=1, B r>=2, C r>=2, D r>=4, E 6..8, F 4, G 2.
    static bool admissible(char family, int rank);
    static CartanType make(char family, int rank);  // throws RejectedInput
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

// Integer vector in the simple-root basis (coefficient of alpha_i at slot i).
struct RootVector {
    std::vector<long long> c;
    bool operator==(const RootVector& o) const { return c == o.c; }
    bool operator<(const RootVector& o) const { return c < o.c; }
};

// Integer vector in the fundamental-weight basis; entry i is <lambda, alpha_i^vee>.
struct WeightVector {
    std::vector<long long> c;
    bool operator==(const WeightVector& o) const { return c == o.c; }
    bool operator<(const WeightVector& o) const { return c < o.c; }
};

WeightVector operator+(const WeightVector&, const WeightVector&);
WeightVector operator-(const WeightVector&, const WeightVector&);
WeightVector operator*(long long, const WeightVector&);
RootVector operator+(const RootVector&, const RootVector&);
RootVector operator-(const RootVector&, const RootVector&);
RootVector operator*(long long, const RootVector&);
std::string coords_str(const std::vector<long long>&);

// theta and its companions, Delta_0 and the boundary set of simple roots.
// theta_plus / k / theta_plus_plus exist only when the system has two root
// lengths; delta0 / boundary need rank >= 2.
struct DistinguishedRoots {
    RootVector theta;
    std::optional<RootVector> theta_plus;
    std::optional<int> k_index;  // 1-based
    std::optional<RootVector> theta_plus_plus;
    std::set<int> delta0;    // 1-based simple indices with <theta, a_i^vee> = 0
    std::set<int> boundary;  // complement of delta0 in Delta
};

class RootSystem {
  public:
    explicit RootSystem(CartanType t);

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    // cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based; column j is alpha_j in
    // fundamental coordinates.
    long long cartan(int i, int j) const { return cartan_[i][j]; }

    const std::vector<RootVector>& positive_roots() const { return positive_; }
    long long num_positive() const { return (long long)positive_.size(); }

    bool is_root(const RootVector& v) const;
    bool is_positive_root(const RootVector& v) const;
    // Index into positive_roots() of v or -v; throws RejectedInput otherwise.
    int root_index(const RootVector& v) const;

    // Coroot of a root, in simple-coroot coordinates.
    std::vector<long long> coroot(const RootVector& root) const;
    // <lambda, alpha^vee> for a root alpha; throws if alpha is not a root.
    long long pairing(const WeightVector& lambda, const RootVector& root) const;

    long long height(const RootVector& v) const;           // any lattice vector
    long long coroot_height(const RootVector& root) const;  // roots only
    long long height_p(const std::set<int>& delta0, const RootVector& v) const;

    bool is_long(const RootVector& root) const;
    bool is_short(const RootVector& root) const;
    bool two_lengths() const { return two_lengths_; }

    const RootVector& theta() const { return theta_; }
    const WeightVector& theta_weight() const { return theta_w_; }
    const DistinguishedRoots& distinguished() const { return dist_; }

    WeightVector to_weight(const RootVector& v) const;  // multiply by Cartan matrix
    WeightVector rho() const;
    WeightVector zero_weight() const;
    WeightVector simple_root_weight(int i) const;  // 1-based
    WeightVector fundamental_weight(int i) const;  // 1-based

    long long dim_g() const { return 2 * num_positive() + rank_; }
    long long coxeter_number() const { return height(theta_) + 1; }

    // Roots of the subsystem generated by the simple roots in `support`
    // (1-based indices): the roots of Phi supported on that subset.
    std::vector<RootVector> subsystem_positive(const std::set<int>& support) const;

  private:
    CartanType type_;
    int rank_;
    std::vector<std::vector<long long>> cartan_;
    std::vector<long long> halfsq_;  // d_i = (a_i, a_i)/2, short roots at 1
    std::vector<RootVector> positive_;
    std::vector<std::vector<long long>> coroots_;  // aligned with positive_
    std::vector<long long> droot_;                 // (a,a)/2 per positive root
    std::map<std::vector<long long>, int> index_;
    bool two_lengths_ = false;
    RootVector theta_;
    WeightVector theta_w_;
    DistinguishedRoots dist_;

    void enumerate_roots();
    void compute_distinguished();
};

RootSystem build_root_system(CartanType t);

}  // namespace hess
