//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CyclotomicScalar`] is an element of Q(ζ_n) stored as a rational
//! combination of the powers ζ_n^0 .. ζ_n^{n-1}, kept in canonical form:
//! the coefficient vector is the remainder modulo the n-th cyclotomic
//! polynomial Φ_n, so every value has a unique representation and zero
//! testing is a coefficient check rather than a floating comparison.
//! Scalars of different orders combine by lifting both to the lcm order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, the coefficient domain of every scalar.
pub type Rational = BigRational;

/// Floating twin of a scalar: a plain double-precision complex number.
pub type ComplexFloat = Complex64;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Rational from an integer pair; panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(big(num), big(den))
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and per-order reduction tables
// ---------------------------------------------------------------------------

/// Φ_n as integer coefficients, index = degree, leading coefficient 1.
fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by the product of Φ_d over proper divisors d of n.
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division of integer polynomials (remainder known to be zero).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd && den[dd].is_one());
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for j in 0..=dd {
                rem[i + j] -= &c * &den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(BigInt::is_zero));
    quot
}

/// Precomputed data for one root order: Φ_n and the canonical form of each
/// monomial ζ_n^t, used to reduce raw coefficient vectors.
struct OrderData {
    phi: usize,
    /// monomials[t] = canonical coefficients of ζ_n^t, full length n.
    monomials: Vec<Vec<Rational>>,
}

fn order_data(n: usize) -> Arc<OrderData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OrderData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return Arc::clone(d);
    }
    let cyclo = cyclotomic_polynomial(n);
    let phi = cyclo.len() - 1;
    let mut monomials: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for t in 0..n {
        if t < phi {
            let mut m = vec![Rational::zero(); n];
            m[t] = Rational::one();
            monomials.push(m);
        } else {
            // x^t = x * x^{t-1} reduced by the monic Φ_n.
            let prev = &monomials[t - 1];
            let mut m = vec![Rational::zero(); n];
            for i in 0..phi {
                if !prev[i].is_zero() {
                    m[i + 1] = prev[i].clone();
                }
            }
            let lead = m[phi].clone();
            if !lead.is_zero() {
                m[phi] = Rational::zero();
                for i in 0..phi {
                    if !cyclo[i].is_zero() {
                        m[i] -= &lead * Rational::from(cyclo[i].clone());
                    }
                }
            }
            monomials.push(m);
        }
    }
    let data = Arc::new(OrderData { phi, monomials });
    cache.lock().unwrap().insert(n, Arc::clone(&data));
    data
}

// ---------------------------------------------------------------------------
// CyclotomicScalar
// ---------------------------------------------------------------------------

/// Exact element of Q(ζ_n): value = Σ_t coeffs[t]·ζ_n^t, canonical modulo Φ_n.
#[derive(Clone)]
pub struct CyclotomicScalar {
    order: usize,
    coeffs: Vec<Rational>,
}

impl CyclotomicScalar {
    /// ζ_n^t, the primitive n-th root of unity raised to t (t reduced mod n).
    pub fn root_of_unity(n: usize, t: i64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let t = t.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rational::zero(); n];
        raw[t] = Rational::one();
        Ok(Self::reduce_raw(n, raw))
    }

    /// The rational `r` viewed as a scalar of order 1.
    pub fn from_rational(r: Rational) -> Self {
        CyclotomicScalar {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(Rational::from(big(v)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical coefficient vector (length = order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Reduce a raw length-n coefficient vector to canonical form.
    fn reduce_raw(n: usize, raw: Vec<Rational>) -> Self {
        let data = order_data(n);
        if raw[data.phi..].iter().all(Rational::is_zero) {
            return CyclotomicScalar {
                order: n,
                coeffs: raw,
            };
        }
        let mut out = vec![Rational::zero(); n];
        out[..data.phi].clone_from_slice(&raw[..data.phi]);
        for t in data.phi..n {
            if !raw[t].is_zero() {
                for (i, m) in data.monomials[t].iter().enumerate().take(data.phi) {
                    if !m.is_zero() {
                        out[i] += &raw[t] * m;
                    }
                }
            }
        }
        CyclotomicScalar {
            order: n,
            coeffs: out,
        }
    }

    /// Re-express at a multiple of the current order (ζ_n = ζ_N^{N/n}).
    pub fn lift_to(&self, target: usize) -> Self {
        assert!(
            target % self.order == 0,
            "lift target {target} not a multiple of order {}",
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        let step = target / self.order;
        let mut raw = vec![Rational::zero(); target];
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[t * step] = c.clone();
            }
        }
        Self::reduce_raw(target, raw)
    }

    /// Attempt to express this value in Q(ζ_m) for a divisor m of the order.
    ///
    /// Solves for rationals c_0..c_{m-1} with Σ c_j ζ_m^j = self; returns
    /// `None` when the value does not lie in the smaller field.
    pub fn reduce_to_order(&self, m: usize) -> Option<Self> {
        if m == 0 || self.order % m != 0 {
            return None;
        }
        if m == self.order {
            return Some(self.clone());
        }
        let n = self.order;
        let data = order_data(n);
        let step = n / m;
        // Columns: canonical forms of ζ_n^{j·step}; rows: positions 0..phi.
        let cols: Vec<&Vec<Rational>> = (0..m).map(|j| &data.monomials[j * step]).collect();
        let rows = data.phi;
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                row.push(self.coeffs[i].clone());
                row
            })
            .collect();
        // Gaussian elimination over Q.
        let mut pivot_of_col = vec![usize::MAX; m];
        let mut r = 0;
        for c in 0..m {
            let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = {
                let v = aug[r][c].clone();
                Rational::one() / v
            };
            for x in aug[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in 0..=m {
                        let sub = &f * &aug[r][j];
                        aug[i][j] -= sub;
                    }
                }
            }
            pivot_of_col[c] = r;
            r += 1;
        }
        // Inconsistent rows mean the value is outside Q(ζ_m).
        for row in aug.iter().skip(r) {
            if !row[m].is_zero() {
                return None;
            }
        }
        let mut sol = vec![Rational::zero(); m];
        for c in 0..m {
            if pivot_of_col[c] != usize::MAX {
                sol[c] = aug[pivot_of_col[c]][m].clone();
            }
        }
        let candidate = Self::reduce_raw(m, sol);
        // The column set can be rationally dependent; confirm the solve.
        if candidate.lift_to(n) == *self {
            Some(candidate)
        } else {
            None
        }
    }

    fn lift_pair(a: &Self, b: &Self) -> (Self, Self, usize) {
        let n = a.order.lcm(&b.order);
        (a.lift_to(n), b.lift_to(n), n)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, n) = Self::lift_pair(self, other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CyclotomicScalar { order: n, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, n) = Self::lift_pair(self, other);
        // Sparse convolution with exponents folded by ζ^n = 1.
        let mut raw = vec![Rational::zero(); n];
        let nz_a: Vec<(usize, &Rational)> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let nz_b: Vec<(usize, &Rational)> = b
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, ci) in &nz_a {
            for (j, cj) in &nz_b {
                let t = (i + j) % n;
                raw[t] += *ci * *cj;
            }
        }
        Self::reduce_raw(n, raw)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation: ζ_n^t ↦ ζ_n^{n-t}.
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut raw = vec![Rational::zero(); n];
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - t) % n] += c;
            }
        }
        Self::reduce_raw(n, raw)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_n.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order;
        let data = order_data(n);
        let phi: Vec<Rational> = cyclotomic_polynomial(n)
            .into_iter()
            .map(Rational::from)
            .collect();
        let a: Vec<Rational> = self.coeffs[..data.phi].to_vec();
        let (g, u) = poly_ext_gcd(&a, &phi);
        // gcd(a, Φ_n) is a nonzero constant since Q(ζ_n) is a field.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let ginv = Rational::one() / g[0].clone();
        let mut raw = vec![Rational::zero(); n];
        for (i, c) in u.iter().enumerate() {
            if !c.is_zero() {
                raw[i % n] += c * &ginv;
            }
        }
        Ok(Self::reduce_raw(n, raw))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// |x|² = x·conj(x), itself a scalar (real, often rational).
    pub fn modulus_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Exact zero test: canonical coefficients all vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// The value as a rational, when it lies in Q.
    pub fn try_to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Floating twin: Σ coeffs[t]·exp(2πi t/n).
    pub fn to_float(&self) -> ComplexFloat {
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let angle = std::f64::consts::TAU * (t as f64) / n;
                acc += rational_to_f64(c) * Complex64::new(angle.cos(), angle.sin());
            }
        }
        acc
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of rounded parts for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Self::lift_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicScalar {}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if t == 0 {
                    terms.push(format!("{c}"));
                } else {
                    terms.push(format!("{c}·ζ{}^{t}", self.order));
                }
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (for the inverse)
// ---------------------------------------------------------------------------

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    match poly_degree(&p) {
        Some(d) => {
            p.truncate(d + 1);
            p
        }
        None => vec![Rational::zero()],
    }
}

fn poly_rem_quot(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len().max(db + 1)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let f = &rem[dr] / &b[db];
        quot[dr - db] = f.clone();
        for i in 0..=db {
            let sub = &f * &b[i];
            rem[dr - db + i] -= sub;
        }
        rem[dr] = Rational::zero();
    }
    (poly_trim(quot), poly_trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

/// Returns (g, u) with u·a ≡ g (mod m) and g = gcd(a, m).
fn poly_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_trim(m.to_vec());
    let mut r1 = poly_trim(a.to_vec());
    let mut u0 = vec![Rational::zero()];
    let mut u1 = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_rem_quot(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    (r0, u0)
}

// ---------------------------------------------------------------------------
// Serialization: {order, coeffs: [[num, den], ...]} with decimal strings
// ---------------------------------------------------------------------------

impl serde::Serialize for CyclotomicScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<[String; 2]> = self
            .coeffs
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        let mut st = serializer.serialize_struct("CyclotomicScalar", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for CyclotomicScalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as DeError;
        #[derive(serde::Deserialize)]
        struct Raw {
            order: usize,
            coeffs: Vec<[String; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.order == 0 || raw.coeffs.len() != raw.order {
            return Err(DeError::custom("invalid cyclotomic scalar encoding"));
        }
        let mut coeffs = Vec::with_capacity(raw.order);
        for [n, d] in &raw.coeffs {
            let num: BigInt = n.parse().map_err(DeError::custom)?;
            let den: BigInt = d.parse().map_err(DeError::custom)?;
            if den.is_zero() {
                return Err(DeError::custom("zero denominator"));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(CyclotomicScalar::reduce_raw(raw.order, coeffs))
    }
}

// Deterministic ordering key used by group-closure hashing.
impl CyclotomicScalar {
    /// Stable textual key of the canonical form (order-sensitive).
    pub fn canonical_key(&self) -> String {
        let mut s = String::new();
        for c in &self.coeffs {
            s.push_str(&c.numer().to_string());
            s.push('/');
            s.push_str(&c.denom().to_string());
            s.push(',');
        }
        s
    }
}

impl PartialOrd for CyclotomicScalar {
    /// Lexicographic order on canonical coefficients; used only for
    /// deterministic sorting, not a field order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = Self::lift_pair(self, other);
        Some(a.coeffs.cmp(&b.coeffs))
    }
}
