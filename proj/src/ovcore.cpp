#include "ovd/ovcore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace ovd {

namespace {

constexpr int kMaxBruteForceN = 64;

std::uint64_t low_bits(int l) {
    return l >= 64 ? ~0ull : (1ull << l) - 1;
}

void check_brute_force_cap(const OvInstance& inst) {
    if (inst.n() > kMaxBruteForceN) {
        throw ParameterError("brute-force search capped at n <= 64, got n = " +
                             std::to_string(inst.n()));
    }
}

// One bit per call, 1 with probability `density`. Threshold comparison on
// the top 53 bits of std::mt19937_64 output keeps the draw reproducible.
class BitSampler {
public:
    BitSampler(std::uint64_t seed, double density)
        : rng_(seed),
          threshold_(static_cast<std::uint64_t>(
              std::llround(std::clamp(density, 0.0, 1.0) * 9007199254740992.0))) {}

    int next() { return (rng_() >> 11) < threshold_ ? 1 : 0; }
    std::uint64_t next_seed() { return rng_(); }

private:
    std::mt19937_64 rng_;
    std::uint64_t threshold_;  // density * 2^53
};

}  // namespace

BitVector::BitVector(std::uint64_t mask, int length) : mask_(mask), length_(length) {
    if (length < 1 || length > 64) throw DimensionError("vector length must be in [1, 64]");
    mask_ &= low_bits(length);
}

BitVector BitVector::from_string(std::string_view s) {
    if (s.empty() || s.size() > 64) throw DimensionError("vector string length must be in [1, 64]");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            m |= 1ull << i;
        } else if (s[i] != '0') {
            throw ParseError("vector entries must be 0 or 1", 0);
        }
    }
    return BitVector(m, static_cast<int>(s.size()));
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (int i = 1; i <= length_; ++i)
        if (bit(i)) s[i - 1] = '1';
    return s;
}

OvInstance OvInstance::from_vectors(std::vector<BitVector> vs) {
    if (vs.empty()) throw ParameterError("instance needs at least one vector");
    OvInstance inst;
    inst.l = vs.front().length();
    std::set<BitVector> seen;
    for (const auto& v : vs) {
        if (v.length() != inst.l) throw DimensionError("mixed vector lengths in instance");
        if (seen.insert(v).second) inst.vectors.push_back(v);
    }
    return inst;
}

OvInstance OvInstance::from_strings(std::initializer_list<std::string_view> vs) {
    std::vector<BitVector> out;
    for (auto s : vs) out.push_back(BitVector::from_string(s));
    return from_vectors(std::move(out));
}

std::string_view to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::None: return "NONE";
        case ClassTag::Degenerate: return "DEGENERATE";
        case ClassTag::Distinct: return "DISTINCT";
    }
    return "?";
}

bool is_orthogonal(std::span<const BitVector> tuple) {
    if (tuple.empty() || tuple.size() > 4) throw ParameterError("tuple size must be in [1, 4]");
    const int l = tuple.front().length();
    std::uint64_t conj = low_bits(l);
    for (const auto& v : tuple) {
        if (v.length() != l) throw DimensionError("mismatched vector lengths");
        conj &= v.mask();
    }
    return conj == 0;
}

std::optional<std::vector<int>> find_orthogonal_tuple(const OvInstance& inst, int k, bool distinct) {
    if (k < 1 || k > 4) throw ParameterError("k must be in [1, 4]");
    if (distinct && k > inst.n()) throw ParameterError("k exceeds instance size with distinct=true");
    check_brute_force_cap(inst);

    const int n = inst.n();
    const std::uint64_t full = low_bits(inst.l);
    std::vector<int> pick(k, 0);
    std::vector<std::uint64_t> conj(k + 1);
    conj[0] = full;

    // Lexicographic nested search over index tuples.
    int depth = 0;
    while (depth >= 0) {
        if (pick[depth] == n) {
            --depth;
            if (depth >= 0) ++pick[depth];
            continue;
        }
        bool repeated = false;
        if (distinct) {
            for (int d = 0; d < depth && !repeated; ++d) repeated = pick[d] == pick[depth];
        }
        if (repeated) {
            ++pick[depth];
            continue;
        }
        conj[depth + 1] = conj[depth] & inst.vectors[pick[depth]].mask();
        if (depth == k - 1) {
            if (conj[k] == 0) return pick;
            ++pick[depth];
        } else {
            ++depth;
            pick[depth] = 0;
        }
    }
    return std::nullopt;
}

int ind_min(const BitVector& a, const BitVector& b, const BitVector& c, const BitVector& d) {
    if (b.length() != a.length() || c.length() != a.length() || d.length() != a.length())
        throw DimensionError("mismatched vector lengths");
    const std::uint64_t conj = a.mask() & b.mask() & c.mask() & d.mask();
    if (conj == 0) throw UndefinedIndexError("no common-one index: tuple is orthogonal");
    return std::countr_zero(conj) + 1;
}

int maj3(int x, int y, int z) {
    return (x + y + z >= 2) ? 1 : 0;
}

InstanceClass classify(const OvInstance& inst) {
    check_brute_force_cap(inst);
    if (inst.n() >= 4) {
        if (auto w = find_orthogonal_tuple(inst, 4, /*distinct=*/true)) {
            InstanceClass cls;
            cls.tag = ClassTag::Distinct;
            cls.witness = std::array<int, 4>{(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
            return cls;
        }
    }
    // Any orthogonal tuple over at most 3 distinct vectors shows up as an
    // orthogonal 3-tuple with repetition allowed.
    if (find_orthogonal_tuple(inst, std::min(3, inst.n()), /*distinct=*/false))
        return {ClassTag::Degenerate, std::nullopt};
    return {ClassTag::None, std::nullopt};
}

OvInstance gen_random(int n, int l, double one_density, std::uint64_t seed) {
    if (n < 1 || l < 1) throw ParameterError("need n >= 1 and l >= 1");
    if (one_density < 0.0 || one_density > 1.0) throw ParameterError("density must be in [0, 1]");
    BitSampler sampler(seed, one_density);
    std::vector<BitVector> vs;
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = 0;
        for (int i = 0; i < l; ++i)
            m |= static_cast<std::uint64_t>(sampler.next()) << i;
        vs.emplace_back(m, l);
    }
    return OvInstance::from_vectors(std::move(vs));
}

OvInstance gen_no_instance(int n, int l, NoInstanceMode mode, std::uint64_t seed,
                           int attempt_budget) {
    if (n < 3 || l < 1) throw ParameterError("need n >= 3 and l >= 1");
    if (mode == NoInstanceMode::ForcedOne) {
        BitSampler sampler(seed, 0.5);
        std::vector<BitVector> vs;
        std::set<std::uint64_t> seen;
        for (int v = 0; v < n; ++v) {
            // Resample duplicates; at small l the space of forced-one vectors
            // can run out, in which case the realized n falls short.
            for (int attempt = 0; attempt < attempt_budget; ++attempt) {
                std::uint64_t m = 1;  // position 1 pinned to 1 in every vector
                for (int i = 1; i < l; ++i)
                    m |= static_cast<std::uint64_t>(sampler.next()) << i;
                if (seen.insert(m).second) {
                    vs.emplace_back(m, l);
                    break;
                }
            }
        }
        return OvInstance::from_vectors(std::move(vs));
    }
    // Rejection: resample random instances until one classifies as NONE.
    constexpr double kRejectionDensity = 0.8;
    std::mt19937_64 seeder(seed);
    for (int attempt = 0; attempt < attempt_budget; ++attempt) {
        OvInstance inst = gen_random(n, l, kRejectionDensity, seeder());
        if (classify(inst).tag == ClassTag::None) return inst;
    }
    throw ExhaustionError("rejection sampling found no NONE instance within " +
                          std::to_string(attempt_budget) + " attempts");
}

OvInstance gen_planted_distinct(int n, int l, std::uint64_t seed) {
    if (n < 4) throw ParameterError("need n >= 4");
    if (l < 4) throw ParameterError("need l >= 4 to place four nonempty blocks");

    // Contiguous near-equal blocks; block g starts at block_first[g].
    std::array<int, 5> block_first{};
    int pos = 1;
    for (int g = 0; g < 4; ++g) {
        block_first[g] = pos;
        pos += l / 4 + (g < l % 4 ? 1 : 0);
    }
    block_first[4] = l + 1;

    const std::uint64_t full = low_bits(l);
    std::vector<BitVector> vs;
    for (int g = 0; g < 4; ++g) {
        std::uint64_t block = 0;
        for (int i = block_first[g]; i < block_first[g + 1]; ++i) block |= 1ull << (i - 1);
        vs.emplace_back(full & ~block, l);  // 0 exactly on block g
    }

    // Fillers carry a 1 at every block's first position; other positions random.
    std::uint64_t pinned = 0;
    for (int g = 0; g < 4; ++g) pinned |= 1ull << (block_first[g] - 1);
    BitSampler sampler(seed, 0.5);
    std::set<BitVector> seen(vs.begin(), vs.end());
    constexpr int kRetriesPerFiller = 1000;
    for (int v = 4; v < n; ++v) {
        for (int attempt = 0; attempt < kRetriesPerFiller; ++attempt) {
            std::uint64_t m = pinned;
            for (int i = 1; i <= l; ++i)
                if (!((pinned >> (i - 1)) & 1))
                    m |= static_cast<std::uint64_t>(sampler.next()) << (i - 1);
            BitVector cand(m, l);
            if (seen.insert(cand).second) {
                vs.push_back(cand);
                break;
            }
        }
        // All distinct fillers may be exhausted for small l; the dedup
        // contract reports the actual count.
    }
    return OvInstance::from_vectors(std::move(vs));
}

OvInstance read_ov(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("missing header", lineno);
    std::istringstream hdr(line);
    int n = 0, l = 0;
    if (!(hdr >> n >> l) || n < 1 || l < 1) throw ParseError("bad header, expected '<n> <l>'", lineno);

    std::vector<BitVector> vs;
    for (int v = 0; v < n; ++v) {
        if (!next_content_line()) throw ParseError("expected " + std::to_string(n) + " vectors", lineno);
        std::size_t first = line.find_first_not_of(" \t");
        std::size_t last = line.find_last_not_of(" \t");
        std::string_view body(line.data() + first, last - first + 1);
        if (static_cast<int>(body.size()) != l)
            throw ParseError("vector has length " + std::to_string(body.size()) + ", expected " +
                                 std::to_string(l),
                             lineno);
        try {
            vs.push_back(BitVector::from_string(body));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    // Duplicates in the file are merged at ingestion, shrinking n.
    return OvInstance::from_vectors(std::move(vs));
}

void write_ov(std::ostream& out, const OvInstance& inst) {
    out << inst.n() << ' ' << inst.l << '\n';
    for (const auto& v : inst.vectors) out << v.to_string() << '\n';
}

OvInstance read_ov_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_ov(in);
}

void write_ov_file(const std::string& path, const OvInstance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_ov(out, inst);
}

}  // namespace ovd
