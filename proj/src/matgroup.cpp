#include "wordlab/matgroup.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wordlab {

const char *kind_name(GroupKind k)
{
	switch (k)
	{
	case GroupKind::SL2:
		return "sl2";
	case GroupKind::GL2:
		return "gl2";
	case GroupKind::PGL2:
		return "pgl2";
	case GroupKind::SL3:
		return "sl3";
	}
	return "?";
}

GroupKind kind_from_name(const std::string &name)
{
	if (name == "sl2")
		return GroupKind::SL2;
	if (name == "gl2")
		return GroupKind::GL2;
	if (name == "pgl2")
		return GroupKind::PGL2;
	if (name == "sl3")
		return GroupKind::SL3;
	throw std::invalid_argument("unknown group kind: " + name);
}

Mat mat_identity(int n)
{
	Mat m;
	m.n = n;
	for (int i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

Mat mat_mul(const PrimeField &F, const Mat &x, const Mat &y)
{
	assert(x.n == y.n);
	Mat z;
	z.n = x.n;
	for (int i = 0; i < x.n; ++i)
		for (int j = 0; j < x.n; ++j)
		{
			u64 s = 0;
			for (int t = 0; t < x.n; ++t)
				s = F.add(s, F.mul(x.at(i, t), y.at(t, j)));
			z.at(i, j) = s;
		}
	return z;
}

u64 mat_det(const PrimeField &F, const Mat &x)
{
	if (x.n == 2)
		return F.sub(F.mul(x.at(0, 0), x.at(1, 1)), F.mul(x.at(0, 1), x.at(1, 0)));
	u64 d = 0;
	d = F.add(d, F.mul(x.at(0, 0), F.sub(F.mul(x.at(1, 1), x.at(2, 2)), F.mul(x.at(1, 2), x.at(2, 1)))));
	d = F.sub(d, F.mul(x.at(0, 1), F.sub(F.mul(x.at(1, 0), x.at(2, 2)), F.mul(x.at(1, 2), x.at(2, 0)))));
	d = F.add(d, F.mul(x.at(0, 2), F.sub(F.mul(x.at(1, 0), x.at(2, 1)), F.mul(x.at(1, 1), x.at(2, 0)))));
	return d;
}

u64 mat_trace(const PrimeField &F, const Mat &x)
{
	u64 t = 0;
	for (int i = 0; i < x.n; ++i)
		t = F.add(t, x.at(i, i));
	return t;
}

Mat mat_inv(const PrimeField &F, const Mat &x)
{
	u64 d = mat_det(F, x);
	u64 di = F.inv(d); // throws DivisionByZero for singular input
	Mat z;
	z.n = x.n;
	if (x.n == 2)
	{
		z.at(0, 0) = F.mul(di, x.at(1, 1));
		z.at(0, 1) = F.mul(di, F.neg(x.at(0, 1)));
		z.at(1, 0) = F.mul(di, F.neg(x.at(1, 0)));
		z.at(1, 1) = F.mul(di, x.at(0, 0));
		return z;
	}
	// adjugate
	auto cof = [&](int i, int j) {
		int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
		int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
		return F.sub(F.mul(x.at(r0, c0), x.at(r1, c1)), F.mul(x.at(r0, c1), x.at(r1, c0)));
	};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			z.at(i, j) = F.mul(di, cof(j, i));
	return z;
}

std::string mat_to_string(const Mat &x)
{
	std::ostringstream os;
	os << "[";
	for (int i = 0; i < x.n; ++i)
	{
		os << "[";
		for (int j = 0; j < x.n; ++j)
			os << x.at(i, j) << (j + 1 < x.n ? "," : "");
		os << "]";
	}
	os << "]";
	return os.str();
}

u64 GroupTable::closed_form_order(GroupKind kind, u64 p)
{
	switch (kind)
	{
	case GroupKind::SL2:
		return p * (p * p - 1);
	case GroupKind::GL2:
		return (p * p - 1) * (p * p - p);
	case GroupKind::PGL2:
		return p * (p * p - 1);
	case GroupKind::SL3:
		return p * p * p * (p * p * p - 1) * (p * p - 1);
	}
	return 0;
}

int GroupTable::dim() const
{
	switch (kind_)
	{
	case GroupKind::SL2:
	case GroupKind::PGL2:
		return 3;
	case GroupKind::GL2:
		return 4;
	case GroupKind::SL3:
		return 8;
	}
	return 0;
}

GroupTable::GroupTable(GroupKind kind, u64 p) : kind_(kind), field_(p) {}

u64 GroupTable::key_of(const Mat &m) const
{
	if (m.n == 2)
	{
		// 4 residues, 16 bits each
		return (m.a[0] << 48) | (m.a[1] << 32) | (m.a[2] << 16) | m.a[3];
	}
	// 9 residues, 7 bits each (SL3 is only enumerable for tiny p)
	u64 k = 0;
	for (int i = 0; i < 9; ++i)
		k = (k << 7) | m.a[static_cast<size_t>(i)];
	return k;
}

Mat GroupTable::canon(Mat m) const
{
	if (kind_ != GroupKind::PGL2)
		return m;
	for (int i = 0; i < 4; ++i)
	{
		if (m.a[static_cast<size_t>(i)] != 0)
		{
			u64 s = field_.inv(m.a[static_cast<size_t>(i)]);
			for (int j = i; j < 4; ++j)
				m.a[static_cast<size_t>(j)] = field_.mul(m.a[static_cast<size_t>(j)], s);
			return m;
		}
	}
	throw GroupMismatch("canon: zero matrix");
}

GroupTable GroupTable::enumerate(GroupKind kind, u64 p, u64 element_budget)
{
	if (p == 2 || !is_prime_u64(p))
		throw std::invalid_argument("group enumeration requires an odd prime, got " + std::to_string(p));
	u64 order = closed_form_order(kind, p);
	if (order > element_budget)
		throw BudgetExceeded("group " + std::string(kind_name(kind)) + " over F_" + std::to_string(p) + " has " + std::to_string(order) + " elements, budget " + std::to_string(element_budget));
	if (kind == GroupKind::SL3 && p >= 128)
		throw BudgetExceeded("SL3 keys need p < 128");

	GroupTable G(kind, p);
	const PrimeField &F = G.field_;
	auto push = [&](const Mat &m) { G.elements_.push_back(m); };

	if (kind == GroupKind::SL3)
	{
		Mat m;
		m.n = 3;
		// full scan of p^9 matrices is fine at p = 3
		std::array<u64, 9> e{};
		for (;;)
		{
			for (int i = 0; i < 9; ++i)
				m.a[static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
			if (mat_det(F, m) == 1)
				push(m);
			int pos = 8;
			while (pos >= 0 && ++e[static_cast<size_t>(pos)] == p)
				e[static_cast<size_t>(pos--)] = 0;
			if (pos < 0)
				break;
		}
	}
	else
	{
		Mat m;
		m.n = 2;
		for (u64 a = 0; a < p; ++a)
			for (u64 b = 0; b < p; ++b)
				for (u64 c = 0; c < p; ++c)
					for (u64 d = 0; d < p; ++d)
					{
						m.a = {a, b, c, d, 0, 0, 0, 0, 0};
						u64 det = F.sub(F.mul(a, d), F.mul(b, c));
						switch (kind)
						{
						case GroupKind::SL2:
							if (det == 1)
								push(m);
							break;
						case GroupKind::GL2:
							if (det != 0)
								push(m);
							break;
						case GroupKind::PGL2:
							// one representative per scalar coset: first
							// nonzero entry already 1
							if (det != 0)
							{
								int lead = 0;
								while (m.a[static_cast<size_t>(lead)] == 0)
									++lead;
								if (m.a[static_cast<size_t>(lead)] == 1)
									push(m);
							}
							break;
						default:
							break;
						}
					}
	}

	if (G.elements_.size() != order)
		throw std::logic_error("enumeration mismatch: got " + std::to_string(G.elements_.size()) + ", closed form " + std::to_string(order));

	std::sort(G.elements_.begin(), G.elements_.end(), [&](const Mat &x, const Mat &y) { return G.key_of(x) < G.key_of(y); });
	G.index_.reserve(G.elements_.size() * 2);
	for (u32 i = 0; i < G.elements_.size(); ++i)
		G.index_.emplace(G.key_of(G.elements_[i]), i);

	G.identity_ = G.index_.at(G.key_of(mat_identity(kind == GroupKind::SL3 ? 3 : 2)));
	G.inverse_.resize(G.elements_.size());
	for (u32 i = 0; i < G.elements_.size(); ++i)
		G.inverse_[i] = G.index_of(G.canon(mat_inv(F, G.elements_[i])));
	return G;
}

u32 GroupTable::index_of(const Mat &m) const
{
	auto it = index_.find(key_of(canon(m)));
	if (it == index_.end())
		throw GroupMismatch("element not in group table: " + mat_to_string(m));
	return it->second;
}

u32 GroupTable::mul(u32 i, u32 j) const
{
	return index_.at(key_of(canon(mat_mul(field_, elements_[i], elements_[j]))));
}

ClassData conjugacy_classes(const GroupTable &G)
{
	const u32 n = static_cast<u32>(G.order());
	ClassData cd;
	cd.class_of.assign(n, UINT32_MAX);
	for (u32 g = 0; g < n; ++g)
	{
		if (cd.class_of[g] != UINT32_MAX)
			continue;
		u32 cls = cd.k();
		cd.reps.push_back(g);
		u64 size = 0, cent = 0;
		for (u32 h = 0; h < n; ++h)
		{
			u32 x = G.mul(G.mul(h, g), G.inv(h));
			if (cd.class_of[x] == UINT32_MAX)
			{
				cd.class_of[x] = cls;
				++size;
			}
			if (x == g)
				++cent;
		}
		cd.sizes.push_back(size);
		cd.centralizer_sizes.push_back(cent);
		if (size * cent != G.order())
			throw std::logic_error("orbit-stabilizer violated in class computation");
	}
	cd.identity_class = cd.class_of[G.identity()];
	return cd;
}

bool is_generating(const std::vector<Mat> &tuple, const GroupTable &G)
{
	std::vector<u32> gens;
	gens.reserve(tuple.size());
	for (const Mat &m : tuple)
		gens.push_back(G.index_of(m));
	std::vector<char> seen(G.order(), 0);
	std::vector<u32> stack{G.identity()};
	seen[G.identity()] = 1;
	u64 reached = 1;
	while (!stack.empty())
	{
		u32 v = stack.back();
		stack.pop_back();
		for (u32 s : gens)
		{
			u32 w = G.mul(v, s);
			if (!seen[w])
			{
				seen[w] = 1;
				++reached;
				stack.push_back(w);
			}
		}
	}
	return reached == G.order();
}

ClassAlgebra::ClassAlgebra(const GroupTable &G, const ClassData &cd, int workers)
{
	k_ = cd.k();
	c_.assign(static_cast<size_t>(k_) * k_ * k_, 0);
	const u32 n = static_cast<u32>(G.order());
	parallel_shards(static_cast<int>(k_), workers, [&](int kk) {
		u32 gk = cd.reps[static_cast<size_t>(kk)];
		u32 *slice = c_.data() + static_cast<size_t>(kk) * k_ * k_;
		for (u32 x = 0; x < n; ++x)
		{
			u32 i = cd.class_of[x];
			u32 j = cd.class_of[G.mul(G.inv(x), gk)];
			++slice[static_cast<size_t>(i) * k_ + j];
		}
	});
}

} // namespace wordlab
