#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace susygraph {

using BigInt = boost::multiprecision::cpp_int;

/// Gaussian integer a + b·i with arbitrary-precision parts.
///
/// Values whose parts fit in 64 bits are stored inline and combined with
/// overflow-checked machine arithmetic; anything larger moves to BigInt.
/// The representation is canonical (big only when a part does not fit), so
/// equality can compare representations.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(BigInt re, BigInt im) { assign(std::move(re), std::move(im)); }
  template <std::integral T>
  GaussInt(T re, T im = 0) {  // NOLINT(google-explicit-constructor)
    if (std::in_range<std::int64_t>(re) && std::in_range<std::int64_t>(im)) {
      re_ = static_cast<std::int64_t>(re);
      im_ = static_cast<std::int64_t>(im);
    } else {
      assign(BigInt(re), BigInt(im));
    }
  }

  GaussInt(const GaussInt& o) : re_(o.re_), im_(o.im_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
  GaussInt(GaussInt&&) noexcept = default;
  GaussInt& operator=(const GaussInt& o) {
    if (this != &o) {
      re_ = o.re_;
      im_ = o.im_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  GaussInt& operator=(GaussInt&&) noexcept = default;
  ~GaussInt() = default;

  static GaussInt i() { return GaussInt(0, 1); }

  BigInt real() const { return big_ ? big_->re : BigInt(re_); }
  BigInt imag() const { return big_ ? big_->im : BigInt(im_); }

  bool is_zero() const noexcept { return !big_ && re_ == 0 && im_ == 0; }
  bool is_real() const noexcept { return big_ ? big_->im.is_zero() : im_ == 0; }

  GaussInt conj() const {
    if (!big_ && im_ != min64) return GaussInt(re_, -im_);
    return GaussInt(real(), BigInt(-imag()));
  }

  /// |z|^2
  BigInt norm() const {
    if (!big_) {
      const auto a = static_cast<__int128>(re_) * re_;
      const auto b = static_cast<__int128>(im_) * im_;
      if (a <= max128 - b) return wide(a + b);
    }
    const BigInt re = real();
    const BigInt im = imag();
    return re * re + im * im;
  }

  /// z / 2; throws std::domain_error unless both parts are even.
  GaussInt halved() const {
    if (!big_) {
      if ((re_ & 1) || (im_ & 1)) throw std::domain_error("GaussInt::halved: odd entry " + to_string());
      return GaussInt(re_ / 2, im_ / 2);
    }
    if (boost::multiprecision::bit_test(big_->re, 0) || boost::multiprecision::bit_test(big_->im, 0)) {
      throw std::domain_error("GaussInt::halved: odd entry " + to_string());
    }
    return GaussInt(BigInt(big_->re / 2), BigInt(big_->im / 2));
  }

  std::complex<double> to_complex() const {
    if (!big_) return {static_cast<double>(re_), static_cast<double>(im_)};
    return {big_->re.convert_to<double>(), big_->im.convert_to<double>()};
  }

  std::string to_string() const {
    const BigInt re = real();
    const BigInt im = imag();
    if (im.is_zero()) return re.str();
    std::string out = re.is_zero() ? std::string() : re.str();
    if (im > 0 && !re.is_zero()) out += "+";
    if (im == -1) {
      out += "-";
    } else if (im != 1) {
      out += im.str();
    }
    return out + "i";
  }

  GaussInt operator-() const {
    if (!big_ && re_ != min64 && im_ != min64) return GaussInt(-re_, -im_);
    return GaussInt(BigInt(-real()), BigInt(-imag()));
  }

  GaussInt& operator+=(const GaussInt& o) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    if (!big_ && !o.big_ && !__builtin_add_overflow(re_, o.re_, &re) && !__builtin_add_overflow(im_, o.im_, &im)) {
      re_ = re;
      im_ = im;
      return *this;
    }
    assign(real() + o.real(), imag() + o.imag());
    return *this;
  }

  GaussInt& operator-=(const GaussInt& o) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(re_, o.re_, &re) && !__builtin_sub_overflow(im_, o.im_, &im)) {
      re_ = re;
      im_ = im;
      return *this;
    }
    assign(real() - o.real(), imag() - o.imag());
    return *this;
  }

  GaussInt& operator*=(const GaussInt& o) {
    if (!big_ && !o.big_) {
      if (im_ == 0 && o.im_ == 0) {
        std::int64_t re = 0;
        if (!__builtin_mul_overflow(re_, o.re_, &re)) {
          re_ = re;
          return *this;
        }
      } else if (re_ != min64 && im_ != min64 && o.re_ != min64 && o.im_ != min64) {
        // Without INT64_MIN each product is below 2^126, so the sums fit.
        const __int128 re = static_cast<__int128>(re_) * o.re_ - static_cast<__int128>(im_) * o.im_;
        const __int128 im = static_cast<__int128>(re_) * o.im_ + static_cast<__int128>(im_) * o.re_;
        if (fits(re) && fits(im)) {
          re_ = static_cast<std::int64_t>(re);
          im_ = static_cast<std::int64_t>(im);
          return *this;
        }
      }
    }
    const BigInt a = real();
    const BigInt b = imag();
    const BigInt c = o.real();
    const BigInt d = o.imag();
    assign(a * c - b * d, a * d + b * c);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    if (!a.big_ && !b.big_) return a.re_ == b.re_ && a.im_ == b.im_;
    if (!a.big_ || !b.big_) return false;
    return a.big_->re == b.big_->re && a.big_->im == b.big_->im;
  }

 private:
  struct Big {
    BigInt re;
    BigInt im;
  };

  static constexpr std::int64_t min64 = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t max64 = std::numeric_limits<std::int64_t>::max();
  static constexpr __int128 max128 = static_cast<__int128>((static_cast<unsigned __int128>(1) << 127) - 1);

  static bool fits(__int128 v) { return v >= min64 && v <= max64; }
  static bool fits(const BigInt& v) { return v >= min64 && v <= max64; }

  static BigInt wide(__int128 v) {
    const bool negative = v < 0;
    auto magnitude = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(magnitude >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(magnitude);
    return negative ? BigInt(-out) : out;
  }

  void assign(BigInt re, BigInt im) {
    if (fits(re) && fits(im)) {
      re_ = re.convert_to<std::int64_t>();
      im_ = im.convert_to<std::int64_t>();
      big_.reset();
    } else {
      re_ = 0;
      im_ = 0;
      big_ = std::make_unique<Big>(Big{std::move(re), std::move(im)});
    }
  }

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  std::unique_ptr<Big> big_;
};

}  // namespace susygraph
