#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ovd/errors.hpp"

namespace ovd {

/// One 0/1 vector of dimension l (1-indexed positions), stored as a bit mask.
/// Dimensions up to 64 are supported; gadget builds cap l much lower.
class BitVector {
public:
    BitVector() = default;
    BitVector(std::uint64_t mask, int length);

    /// Parses a string over {0,1}, e.g. "110"; position 1 is the first character.
    static BitVector from_string(std::string_view s);

    int length() const { return length_; }
    std::uint64_t mask() const { return mask_; }

    /// Entry at 1-indexed position i.
    int bit(int i) const { return static_cast<int>((mask_ >> (i - 1)) & 1u); }

    std::string to_string() const;

    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    std::uint64_t mask_ = 0;
    int length_ = 0;
};

/// Deduplicated, order-preserving set of equal-length bit vectors.
struct OvInstance {
    std::vector<BitVector> vectors;
    int l = 0;

    int n() const { return static_cast<int>(vectors.size()); }

    /// Deduplicates (first occurrence wins) and checks uniform length.
    static OvInstance from_vectors(std::vector<BitVector> vs);
    static OvInstance from_strings(std::initializer_list<std::string_view> vs);
};

enum class ClassTag { None, Degenerate, Distinct };

std::string_view to_string(ClassTag tag);

struct InstanceClass {
    ClassTag tag = ClassTag::None;
    // Present iff tag == Distinct: four pairwise-distinct vector ids (0-based)
    // forming an orthogonal quadruple, lexicographically first.
    std::optional<std::array<int, 4>> witness;
};

/// True iff every position has a 0 entry in some member. Tuple size 1..4.
bool is_orthogonal(std::span<const BitVector> tuple);

/// Lexicographically-first index tuple (0-based ids) forming an orthogonal
/// k-tuple; pairwise-distinct ids iff distinct. Empty optional if none.
std::optional<std::vector<int>> find_orthogonal_tuple(const OvInstance& inst, int k, bool distinct);

/// Smallest 1-indexed position where all four vectors are 1.
/// Throws UndefinedIndexError when the four form an orthogonal quadruple.
int ind_min(const BitVector& a, const BitVector& b, const BitVector& c, const BitVector& d);

int maj3(int x, int y, int z);

InstanceClass classify(const OvInstance& inst);

enum class NoInstanceMode { ForcedOne, Rejection };

/// i.i.d. entries (1 with probability one_density), deduplicated, seeded.
OvInstance gen_random(int n, int l, double one_density, std::uint64_t seed);

/// Instance guaranteed to classify as NONE.
OvInstance gen_no_instance(int n, int l, NoInstanceMode mode, std::uint64_t seed,
                           int attempt_budget = 1000);

/// Plants a pairwise-distinct orthogonal quadruple via four coordinate
/// blocks; fillers cannot create smaller orthogonal tuples with the plant.
OvInstance gen_planted_distinct(int n, int l, std::uint64_t seed);

// Text format: "<n> <l>" then n lines over {0,1}; '#' starts a comment line.
OvInstance read_ov(std::istream& in);
void write_ov(std::ostream& out, const OvInstance& inst);
OvInstance read_ov_file(const std::string& path);
void write_ov_file(const std::string& path, const OvInstance& inst);

}  // namespace ovd
