#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lkl {

// Error taxonomy: caps/configuration problems are distinguished from plain
// input errors so the CLI can map them to exit codes.
struct cap_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct invariant_error : std::logic_error {
	using std::logic_error::logic_error;
};

using mask_t = uint64_t;

inline int popcount(mask_t m) { return __builtin_popcountll(m); }
inline int lowest_bit(mask_t m) { return __builtin_ctzll(m); }
inline mask_t bit(int i) { return mask_t(1) << i; }
inline bool has_bit(mask_t m, int i) { return (m >> i) & 1; }
inline mask_t full_mask(int n) { return n >= 64 ? ~mask_t(0) : (mask_t(1) << n) - 1; }

inline std::vector<int> mask_to_vec(mask_t m) {
	std::vector<int> out;
	while (m) {
		int v = lowest_bit(m);
		out.push_back(v);
		m &= m - 1;
	}
	return out;
}

inline mask_t vec_to_mask(const std::vector<int> &v) {
	mask_t m = 0;
	for (int x : v) m |= bit(x);
	return m;
}

// Exact rational arithmetic for the epsilon / round-count formulas. All other
// quantities in the artifact are integers.
struct rational {
	long long num = 0;
	long long den = 1;

	rational() = default;
	rational(long long n) : num(n), den(1) {}
	rational(long long n, long long d) : num(n), den(d) { normalize(); }

	void normalize() {
		if (den == 0) throw std::invalid_argument("rational: zero denominator");
		if (den < 0) { num = -num; den = -den; }
		long long g = std::gcd(num < 0 ? -num : num, den);
		if (g > 1) { num /= g; den /= g; }
	}

	rational operator+(const rational &o) const { return rational(num * o.den + o.num * den, den * o.den); }
	rational operator-(const rational &o) const { return rational(num * o.den - o.num * den, den * o.den); }
	rational operator*(const rational &o) const { return rational(num * o.num, den * o.den); }
	rational operator/(const rational &o) const { return rational(num * o.den, den * o.num); }
	bool operator<(const rational &o) const { return num * o.den < o.num * den; }
	bool operator<=(const rational &o) const { return num * o.den <= o.num * den; }
	bool operator>(const rational &o) const { return o < *this; }
	bool operator>=(const rational &o) const { return o <= *this; }
	bool operator==(const rational &o) const { return num == o.num && den == o.den; }

	long long floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
	long long ceil() const { return -rational(-num, den).floor(); }
	double to_double() const { return double(num) / double(den); }

	std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

	// Parses "1", "0.5", "1/2".
	static rational parse(const std::string &s);
};

// Deterministic RNG helpers. std::uniform_int_distribution is
// implementation-defined, so seeded reproducibility goes through these.
struct rng_t {
	uint64_t state;
	explicit rng_t(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) { next(); next(); }
	uint64_t next() {
		// splitmix64
		uint64_t z = (state += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}
	// uniform in [0, bound)
	uint64_t below(uint64_t bound) {
		if (bound == 0) throw std::invalid_argument("rng.below(0)");
		uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
		uint64_t x;
		do { x = next(); } while (x >= limit);
		return x % bound;
	}
	int range(int lo, int hi) { return lo + int(below(uint64_t(hi - lo + 1))); } // inclusive
	bool chance(double p) {
		if (p <= 0.0) return false;
		if (p >= 1.0) return true;
		return double(next() >> 11) * (1.0 / 9007199254740992.0) < p;
	}
};

// FNV-1a, used for input digests and cache keys.
inline uint64_t fnv1a(const std::string &s) {
	uint64_t h = 1469598103934665603ull;
	for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
	return h;
}

} // namespace lkl
