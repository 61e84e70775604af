// Exact scalar types and Eigen aliases shared by the exact modules.
//
// Roots are integer vectors in the simple-root basis; elements of the Cartan
// subalgebra are rational vectors in the simple-coroot basis.  All exact
// modules work with arbitrary-precision rationals so that face membership and
// integrality tests are genuine equalities.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

// Eigen 3.4 matrices expose a `const_iterator` typedef that is void for
// two-dimensional matrices; boost.multiprecision's byte-container detection
// dereferences it and hard-errors during overload resolution of mixed
// scalar/matrix operators.  Opt Eigen types out of that trait explicitly.
namespace boost { namespace multiprecision { namespace detail {
template <typename C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container<C> : public boost::false_type {};
}}} // namespace boost::multiprecision::detail

namespace tcc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int q_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int q_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return q_den(q) == 1; }

// Largest integer <= q.
inline Int floor_q(const Rational& q)
{
  Int n = q_num(q), d = q_den(q);
  Int f = n / d;
  if (n < 0 && n % d != 0)
    --f;
  return f;
}

inline Int ceil_q(const Rational& q) { return -floor_q(-q); }

// Positive lcm of all entry denominators (1 for an empty matrix).
inline Int denominator_lcm(const QMat& m)
{
  Int l = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      l = boost::multiprecision::lcm(l, q_den(m(i, j)));
  return l;
}

inline std::string to_string(const Rational& q)
{
  return q.str();
}

// Parses "p", "p/q" or a decimal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& s)
{
  auto fail = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty())
    fail();
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos)
      return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos)
      return Rational(Int(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    Int den = 1;
    for (size_t i = 0; i < fp.size(); ++i)
      den *= 10;
    Int num = Int(ip.empty() || ip == "-" ? "0" : ip) * den;
    Int frac = fp.empty() ? Int(0) : Int(fp);
    num += neg ? -frac : frac;
    return Rational(num, den);
  } catch (const std::exception&) {
    fail();
  }
  return Rational(0); // unreachable
}

} // namespace tcc
