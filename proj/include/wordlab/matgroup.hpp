#pragma once

#include "wordlab/ffield.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wordlab {

using u32 = std::uint32_t;

enum class GroupKind { SL2, GL2, PGL2, SL3 };

const char *kind_name(GroupKind k);
GroupKind kind_from_name(const std::string &name);

/// Square matrix over F_p, n = 2 or 3, row-major canonical residues.
struct Mat {
	int n = 2;
	std::array<u64, 9> a{};

	u64 &at(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
	u64 at(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }
	bool operator==(const Mat &o) const = default;
};

Mat mat_identity(int n);
Mat mat_mul(const PrimeField &F, const Mat &x, const Mat &y);
Mat mat_inv(const PrimeField &F, const Mat &x); // requires det != 0
u64 mat_det(const PrimeField &F, const Mat &x);
u64 mat_trace(const PrimeField &F, const Mat &x);
std::string mat_to_string(const Mat &x);

/// Enumerated finite matrix group over F_p with O(1) element indexing.
/// Immutable after construction; construction is single-threaded.
class GroupTable {
  public:
	/// Enumerates the group. Throws BudgetExceeded when the closed-form
	/// order exceeds element_budget, std::invalid_argument on bad p.
	static GroupTable enumerate(GroupKind kind, u64 p, u64 element_budget = 200000);

	GroupKind kind() const { return kind_; }
	const PrimeField &field() const { return field_; }
	u64 p() const { return field_.p(); }
	u64 order() const { return elements_.size(); }
	int dim() const; // dimension of the ambient algebraic group

	const Mat &element(u32 i) const { return elements_[i]; }
	u32 identity() const { return identity_; }

	/// Canonical form of a group element (PGL2: rescale so the first
	/// nonzero entry is 1; other kinds: the matrix itself).
	Mat canon(Mat m) const;

	u32 index_of(const Mat &m) const; // throws GroupMismatch if absent
	u32 mul(u32 i, u32 j) const;
	u32 inv(u32 i) const { return inverse_[i]; }
	Mat mul_mat(const Mat &x, const Mat &y) const { return canon(mat_mul(field_, x, y)); }

	static u64 closed_form_order(GroupKind kind, u64 p);

  private:
	GroupTable(GroupKind kind, u64 p);

	u64 key_of(const Mat &m) const;

	GroupKind kind_;
	PrimeField field_;
	std::vector<Mat> elements_;
	std::unordered_map<u64, u32> index_;
	std::vector<u32> inverse_;
	u32 identity_ = 0;
};

/// Conjugacy-class decomposition with centralizer sizes per class.
struct ClassData {
	std::vector<u32> class_of;          // element ordinal -> class id
	std::vector<u32> reps;              // class id -> representative ordinal
	std::vector<u64> sizes;             // class sizes
	std::vector<u64> centralizer_sizes; // |C_G(rep)|, counted directly
	u32 k() const { return static_cast<u32>(reps.size()); }
	u32 identity_class = 0;
};

/// Orbit computation: conjugate each unvisited element by the whole group.
ClassData conjugacy_classes(const GroupTable &G);

/// True iff the tuple's closure under multiplication reaches all of G.
/// (In a finite group the generated sub-semigroup is the subgroup.)
bool is_generating(const std::vector<Mat> &tuple, const GroupTable &G);

/// Class multiplication constants of the center of the group algebra:
/// c(i,j,k) = #{x in C_i : x^{-1} g_k in C_j}, i.e. the number of ways
/// to write the class-k representative as (element of C_i)(element of C_j).
/// Shards over k with disjoint output slices, so parallel runs are exact.
class ClassAlgebra {
  public:
	ClassAlgebra(const GroupTable &G, const ClassData &cd, int workers = 0);

	u32 k() const { return k_; }
	u64 at(u32 i, u32 j, u32 kk) const { return c_[(static_cast<size_t>(kk) * k_ + i) * k_ + j]; }

  private:
	u32 k_;
	std::vector<u32> c_;
};

} // namespace wordlab
