// Copyright 2026 The oqclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef OQCLAB_CODEC_CODEC_HPP
#define OQCLAB_CODEC_CODEC_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oqc::codec {

struct CodecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered bit sequence, most-significant-first within each field.
class BitString {
public:
  BitString() = default;

  void push(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }

  /// Append `width` bits of `value`, MSB first.
  void push_bits(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) push(static_cast<int>((value >> i) & 1));
  }

  void append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  bool is_prefix_of(const BitString& other) const {
    if (size() > other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (bits_[i] != other.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Cursor over a bit stream for decoding; reports the offset on malformed input.
class BitReader {
public:
  explicit BitReader(const BitString& bs) : bs_(bs) {}

  int read_bit() {
    if (pos_ >= bs_.size())
      throw CodecError("truncated stream at bit offset " + std::to_string(pos_));
    return bs_[pos_++];
  }

  std::uint64_t read_bits(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(read_bit());
    return v;
  }

  std::size_t position() const { return pos_; }
  bool exhausted() const { return pos_ == bs_.size(); }

private:
  const BitString& bs_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Elias-delta integer code.
//
// For n >= 1 with L = bit-length(n) and LL = bit-length(L): emit LL-1 zeros,
// then L in LL binary digits, then the low L-1 bits of n. Total length
// L + 2*LL - 2; n = 1 encodes as the single bit "1".
// ---------------------------------------------------------------------------

inline int bit_length(std::uint64_t n) { return n == 0 ? 0 : std::bit_width(n); }

inline BitString elias_encode(std::uint64_t n) {
  if (n < 1) throw CodecError("elias_encode requires n >= 1");
  const int l = bit_length(n);
  const int ll = bit_length(static_cast<std::uint64_t>(l));
  BitString out;
  for (int i = 0; i < ll - 1; ++i) out.push(0);
  out.push_bits(static_cast<std::uint64_t>(l), ll);
  out.push_bits(n & ((l > 1) ? ((1ULL << (l - 1)) - 1) : 0ULL), l - 1);
  return out;
}

inline std::size_t elias_length(std::uint64_t n) {
  const int l = bit_length(n);
  const int ll = bit_length(static_cast<std::uint64_t>(l));
  return static_cast<std::size_t>(l + 2 * ll - 2);
}

inline std::uint64_t elias_decode(BitReader& r) {
  int zeros = 0;
  while (r.read_bit() == 0) ++zeros;
  // the terminating 1 is the MSB of L
  const int ll = zeros + 1;
  std::uint64_t l = 1;
  for (int i = 0; i < ll - 1; ++i) l = (l << 1) | static_cast<std::uint64_t>(r.read_bit());
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i + 1 < l; ++i)
    n = (n << 1) | static_cast<std::uint64_t>(r.read_bit());
  return n;
}

inline std::uint64_t elias_decode(const BitString& bs, std::size_t* consumed = nullptr) {
  BitReader r(bs);
  const std::uint64_t n = elias_decode(r);
  if (consumed) *consumed = r.position();
  return n;
}

/// Stated code-length budget ceil(log n) + 2 ceil(log log n) + 1, with the
/// inner log argument clamped at 2 so the n = 2 boundary evaluates to 4.
/// Defined for n >= 2.
inline double elias_length_bound(std::uint64_t n) {
  if (n < 2) throw CodecError("length bound defined for n >= 2");
  const double lg = std::log2(static_cast<double>(n));
  return std::ceil(lg) + 2.0 * std::ceil(std::log2(std::max(2.0, lg))) + 1.0;
}

// ---------------------------------------------------------------------------
// Golomb code for the geometric index distribution {(1-q)^{k-1} q}, k >= 1,
// with q = delta^2. Golomb is the optimal prefix code for a geometric source,
// standing in for a Huffman code over the countably infinite alphabet, so the
// expected-length budget 2 log2(4/delta) carries over.
// ---------------------------------------------------------------------------

class GeometricCodec {
public:
  explicit GeometricCodec(double delta) : delta_(delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw CodecError("delta must be in (0,1)");
    q_ = delta * delta;
    m_ = static_cast<std::uint64_t>(std::ceil(-1.0 / std::log2(1.0 - q_)));
    if (m_ < 1) m_ = 1;
    // smallest b with 2^b >= m
    b_ = 0;
    while ((1ULL << b_) < m_) ++b_;
    threshold_ = (1ULL << b_) - m_;
  }

  double delta() const { return delta_; }
  double success_prob() const { return q_; }
  std::uint64_t golomb_m() const { return m_; }

  BitString encode(std::uint64_t k) const {
    if (k < 1) throw CodecError("geometric index must be >= 1");
    const std::uint64_t j = k - 1;
    const std::uint64_t quot = j / m_;
    const std::uint64_t rem = j % m_;
    BitString out;
    for (std::uint64_t i = 0; i < quot; ++i) out.push(1);
    out.push(0);
    if (m_ > 1) {
      if (rem < threshold_)
        out.push_bits(rem, static_cast<int>(b_) - 1);
      else
        out.push_bits(rem + threshold_, static_cast<int>(b_));
    }
    return out;
  }

  std::size_t length(std::uint64_t k) const {
    const std::uint64_t j = k - 1;
    std::size_t len = j / m_ + 1;
    if (m_ > 1) {
      const std::uint64_t rem = j % m_;
      len += (rem < threshold_) ? b_ - 1 : b_;
    }
    return len;
  }

  std::uint64_t decode(BitReader& r) const {
    std::uint64_t quot = 0;
    while (r.read_bit() == 1) ++quot;
    std::uint64_t rem = 0;
    if (m_ > 1) {
      rem = r.read_bits(static_cast<int>(b_) - 1);
      if (rem >= threshold_) rem = ((rem << 1) | static_cast<std::uint64_t>(r.read_bit())) - threshold_;
    }
    return quot * m_ + rem + 1;
  }

  /// Expected codeword length under the geometric law, summed until the
  /// analytic tail bound drops below 1e-12.
  double expected_length() const {
    double acc = 0.0;
    double pk = q_;  // P(k=1)
    for (std::uint64_t k = 1;; ++k) {
      acc += pk * static_cast<double>(length(k));
      // tail_{>k}: sum of pk*len over the rest, len(j) <= (j-1)/m + 1 + b
      const double tail_mass = pk * (1.0 - q_) / q_;
      const double tail_bound =
          tail_mass * (static_cast<double>(k) / static_cast<double>(m_) + 1.0 +
                       static_cast<double>(b_)) +
          pk * (1.0 - q_) / (q_ * q_) / static_cast<double>(m_);
      if (tail_bound < 1e-12) break;
      pk *= (1.0 - q_);
      if (k > 100000000ULL) break;
    }
    return acc;
  }

  /// Shannon entropy of the geometric law in bits.
  double source_entropy() const {
    const double h = -(1.0 - q_) * std::log2(1.0 - q_) - q_ * std::log2(q_);
    return h / q_;
  }

private:
  double delta_;
  double q_;
  std::uint64_t m_;
  std::uint64_t b_ = 0;
  std::uint64_t threshold_;
};

// ---------------------------------------------------------------------------
// Tuple coding: concatenated Elias codes, one per component.
// ---------------------------------------------------------------------------

using Tuple = std::vector<std::uint32_t>;

inline BitString tuple_encode(const Tuple& t) {
  if (t.empty()) throw CodecError("empty tuple");
  BitString out;
  for (auto v : t) out.append(elias_encode(v));
  return out;
}

inline std::size_t tuple_length(const Tuple& t) {
  std::size_t len = 0;
  for (auto v : t) len += elias_length(v);
  return len;
}

inline Tuple tuple_decode(BitReader& r, int arity) {
  Tuple t;
  for (int i = 0; i < arity; ++i)
    t.push_back(static_cast<std::uint32_t>(elias_decode(r)));
  return t;
}

/// Aggregated budget log2(prod) + 2r log2 log2(prod) + 4r, inner log clamped
/// at 2; defined when the component product is >= 2.
inline double tuple_length_bound(const Tuple& t) {
  double log_prod = 0.0;
  for (auto v : t) log_prod += std::log2(static_cast<double>(v));
  if (log_prod < 1.0) throw CodecError("tuple bound defined for product >= 2");
  const double r = static_cast<double>(t.size());
  return log_prod + 2.0 * r * std::log2(std::max(2.0, log_prod)) + 4.0 * r;
}

// ---------------------------------------------------------------------------
// Binary transcript container: magic "OQC1", then per-message records of a
// varint bit-length followed by the padded bits.
// ---------------------------------------------------------------------------

inline void write_varint(std::ostream& os, std::uint64_t v) {
  while (v >= 0x80) {
    os.put(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  os.put(static_cast<char>(v));
}

inline std::uint64_t read_varint(std::istream& is) {
  std::uint64_t v = 0;
  int shift = 0;
  for (;;) {
    const int c = is.get();
    if (c == EOF) throw CodecError("truncated varint in transcript");
    v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
    if (!(c & 0x80)) break;
    shift += 7;
  }
  return v;
}

inline void write_transcript(std::ostream& os, const std::vector<BitString>& messages) {
  os.write("OQC1", 4);
  for (const auto& m : messages) {
    write_varint(os, m.size());
    std::uint8_t byte = 0;
    int used = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      byte = static_cast<std::uint8_t>((byte << 1) | m[i]);
      if (++used == 8) {
        os.put(static_cast<char>(byte));
        byte = 0;
        used = 0;
      }
    }
    if (used > 0) os.put(static_cast<char>(byte << (8 - used)));
  }
}

inline std::vector<BitString> read_transcript(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (is.gcount() != 4 || std::string(magic, 4) != "OQC1")
    throw CodecError("bad transcript magic");
  std::vector<BitString> out;
  while (is.peek() != EOF) {
    const std::uint64_t nbits = read_varint(is);
    BitString m;
    std::uint64_t remaining = nbits;
    while (remaining > 0) {
      const int c = is.get();
      if (c == EOF) throw CodecError("truncated transcript record");
      for (int i = 7; i >= 0 && remaining > 0; --i, --remaining)
        m.push((c >> i) & 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace oqc::codec

#endif
