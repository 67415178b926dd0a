//! Degree-truncated symmetric functions over five bases, the truncation map
//! to symmetric polynomials, and expansion of symmetric polynomials in
//! elementary symmetric polynomials.

mod convert;
mod eexpand;
mod monomial;
mod sympoly;

pub use eexpand::{e_expand, EExpansion};
pub use monomial::Monomial;
pub use sympoly::SymPoly;

use crate::partitions::Partition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub(crate) use convert::CoeffMap;

/// The five classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// monomial `m_λ`
    M,
    /// elementary `e_λ`
    E,
    /// complete homogeneous `h_λ`
    H,
    /// power sum `p_λ`
    P,
    /// Schur `s_λ`
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            'h' => Some(Basis::H),
            'p' => Some(Basis::P),
            's' => Some(Basis::S),
            _ => None,
        }
    }

    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A symmetric function truncated at a maximum degree, stored as a sparse
/// partition → coefficient map in one of the five bases.
///
/// Coefficients are exact big rationals; the power-sum basis genuinely needs
/// denominators, the other bases carry integral values for integral inputs
/// and assert that on serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    max_degree: u32,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, max_degree: u32) -> Self {
        SymFunc { basis, max_degree, terms: BTreeMap::new() }
    }

    /// The constant 1 (empty-partition term) in any basis.
    pub fn one(basis: Basis, max_degree: u32) -> Self {
        let mut f = Self::zero(basis, max_degree);
        f.add_term(Partition::empty(), BigRational::one());
        f
    }

    /// The basis element indexed by `λ` (so `m_λ`, `e_λ`, ... depending on
    /// `basis`); zero if `λ` exceeds the truncation degree.
    pub fn basis_element(basis: Basis, lambda: Partition, max_degree: u32) -> Self {
        let mut f = Self::zero(basis, max_degree);
        f.add_term(lambda, BigRational::one());
        f
    }

    /// `e_n` truncated at `max_degree`.
    pub fn elementary(n: u32, max_degree: u32) -> Self {
        Self::basis_element(Basis::E, Partition::new(vec![n]), max_degree)
    }

    /// `h_n` truncated at `max_degree`.
    pub fn homogeneous(n: u32, max_degree: u32) -> Self {
        Self::basis_element(Basis::H, Partition::new(vec![n]), max_degree)
    }

    /// `p_n` truncated at `max_degree`.
    pub fn power_sum(n: u32, max_degree: u32) -> Self {
        Self::basis_element(Basis::P, Partition::new(vec![n]), max_degree)
    }

    /// `s_λ` truncated at `max_degree`.
    pub fn schur(lambda: Partition, max_degree: u32) -> Self {
        Self::basis_element(Basis::S, lambda, max_degree)
    }

    /// `m_λ` truncated at `max_degree`.
    pub fn monomial(lambda: Partition, max_degree: u32) -> Self {
        Self::basis_element(Basis::M, lambda, max_degree)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c` at key `λ`. Terms beyond the truncation degree are dropped:
    /// the ring is graded, so this is the quotient map, not data loss.
    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() || lambda.weight() > self.max_degree {
            return;
        }
        convert::add_scaled(&mut self.terms, lambda, c);
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis, self.max_degree);
        }
        SymFunc {
            basis: self.basis,
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        assert_eq!(self.max_degree, other.max_degree, "truncation mismatch in add");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&convert::rat_int(-1)))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    /// Largest weight with a nonzero coefficient.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// The same function re-expressed in `target`. Routing: s→h and s→e go
    /// through Jacobi–Trudi determinants, everything else through the
    /// power-sum hub.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let terms = match (self.basis, target) {
            (Basis::S, Basis::H) => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in &self.terms {
                    for (mu, k) in convert::s_in_h(lambda) {
                        convert::add_scaled(&mut acc, mu, c * BigRational::from_integer(k));
                    }
                }
                acc
            }
            (Basis::S, Basis::E) => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in &self.terms {
                    for (mu, k) in convert::s_in_e(lambda) {
                        convert::add_scaled(&mut acc, mu, c * BigRational::from_integer(k));
                    }
                }
                acc
            }
            _ => Self::from_p_map(&self.to_p_map(), target),
        };
        SymFunc { basis: target, max_degree: self.max_degree, terms }
    }

    /// Internal: coefficients of this function over the power-sum basis.
    pub(crate) fn to_p_map(&self) -> CoeffMap {
        match self.basis {
            Basis::P => self.terms.clone(),
            Basis::E => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in &self.terms {
                    let mut prod = unit_map();
                    for &part in lambda.parts() {
                        prod = convert::map_mul(&prod, &convert::e_in_p(part), None);
                    }
                    for (k, v) in prod {
                        convert::add_scaled(&mut acc, k, v * c);
                    }
                }
                acc
            }
            Basis::H => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in &self.terms {
                    let mut prod = unit_map();
                    for &part in lambda.parts() {
                        prod = convert::map_mul(&prod, &convert::h_in_p(part), None);
                    }
                    for (k, v) in prod {
                        convert::add_scaled(&mut acc, k, v * c);
                    }
                }
                acc
            }
            Basis::S => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in &self.terms {
                    for (k, v) in convert::s_in_p(lambda) {
                        convert::add_scaled(&mut acc, k, v * c);
                    }
                }
                acc
            }
            Basis::M => convert::m_map_to_p(&self.terms),
        }
    }

    /// Internal: rewrite a power-sum coefficient map in `target` basis keys.
    pub(crate) fn from_p_map(pmap: &CoeffMap, target: Basis) -> CoeffMap {
        match target {
            Basis::P => pmap.clone(),
            Basis::M => convert::p_map_to_m(pmap),
            Basis::S => convert::p_map_to_s(pmap),
            Basis::E => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in pmap {
                    let mut prod = unit_map();
                    for &part in lambda.parts() {
                        prod = convert::map_mul(&prod, &convert::p_in_e(part), None);
                    }
                    for (k, v) in prod {
                        convert::add_scaled(&mut acc, k, v * c);
                    }
                }
                acc
            }
            Basis::H => {
                let mut acc = CoeffMap::new();
                for (lambda, c) in pmap {
                    let mut prod = unit_map();
                    for &part in lambda.parts() {
                        prod = convert::map_mul(&prod, &convert::p_in_h(part), None);
                    }
                    for (k, v) in prod {
                        convert::add_scaled(&mut acc, k, v * c);
                    }
                }
                acc
            }
        }
    }

    /// Constructs a function directly from a power-sum coefficient map.
    pub(crate) fn from_p_terms(pmap: CoeffMap, max_degree: u32) -> SymFunc {
        let mut f = Self::zero(Basis::P, max_degree);
        for (k, v) in pmap {
            f.add_term(k, v);
        }
        f
    }

    /// Product truncated at the shared maximum degree; computed over the
    /// power-sum basis, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.max_degree, other.max_degree, "truncation mismatch in multiply");
        let prod = convert::map_mul(&self.to_p_map(), &other.to_p_map(), Some(self.max_degree));
        let terms = Self::from_p_map(&prod, self.basis);
        SymFunc { basis: self.basis, max_degree: self.max_degree, terms }
    }

    /// The truncation map to `r` variables: forgets every monomial involving
    /// a variable beyond `x_r`. At finite truncation degree every basis
    /// element maps to an honest polynomial.
    ///
    /// Panics if the image has non-integral coefficients (possible only for
    /// functions that are genuinely rational combinations, e.g. a bare `p_λ/2`).
    pub fn phi_r(&self, r: usize) -> SymPoly {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let mut add_poly = |poly: &SymPoly, c: &BigRational| {
            for (m, k) in poly.terms() {
                let v = c * BigRational::from_integer(k.clone());
                let entry = acc.entry(m.clone()).or_insert_with(BigRational::zero);
                *entry += v;
            }
        };
        match self.basis {
            Basis::M => {
                for (lambda, c) in &self.terms {
                    add_poly(&SymPoly::monomial_symmetric(r, lambda), c);
                }
            }
            Basis::E => {
                for (lambda, c) in &self.terms {
                    if lambda.parts().iter().any(|&p| p as usize > r) {
                        continue; // a factor e_p with p > r vanishes
                    }
                    let mut prod = SymPoly::one(r);
                    for &part in lambda.parts() {
                        prod = &prod * &SymPoly::elementary(r, part as usize);
                    }
                    add_poly(&prod, c);
                }
            }
            Basis::H => {
                for (lambda, c) in &self.terms {
                    let mut prod = SymPoly::one(r);
                    for &part in lambda.parts() {
                        prod = &prod * &SymPoly::complete_homogeneous(r, part as u16);
                    }
                    add_poly(&prod, c);
                }
            }
            Basis::P => {
                for (lambda, c) in &self.terms {
                    let mut prod = SymPoly::one(r);
                    for &part in lambda.parts() {
                        prod = &prod * &SymPoly::power_sum(r, part as u16);
                    }
                    add_poly(&prod, c);
                }
            }
            Basis::S => {
                // route through p so the Kostka definition stays an
                // independent cross-check
                return self.convert(Basis::P).phi_r(r);
            }
        }
        let mut out = SymPoly::zero(r);
        for (m, v) in acc {
            if v.is_zero() {
                continue;
            }
            assert!(
                v.is_integer(),
                "non-integral coefficient {v} in truncation of a {} -basis function",
                self.basis
            );
            out.add_term(m, v.to_integer());
        }
        out
    }

    /// Canonical text form: one `<basis>:<partition> <coefficient>` line per
    /// term, partitions in reverse-lexicographic (descending) order. In the
    /// integral bases (m, e, h, s) coefficients are asserted integral and
    /// printed as integers; the p basis prints exact rationals.
    pub fn canonical_text(&self) -> String {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = String::new();
        for k in keys {
            let c = &self.terms[k];
            let printed = if self.basis == Basis::P {
                format_rational(c)
            } else {
                assert!(
                    c.is_integer(),
                    "non-integral coefficient {c} in {} basis at {k}",
                    self.basis
                );
                c.to_integer().to_string()
            };
            out.push_str(&format!("{}:{} {}\n", self.basis.letter(), k, printed));
        }
        out
    }

    /// Parses the output of [`SymFunc::canonical_text`]. All lines must carry
    /// the same basis letter; `max_degree` is supplied by the caller (the
    /// text does not store it).
    pub fn parse_canonical_text(text: &str, max_degree: u32) -> Result<SymFunc> {
        let mut basis: Option<Basis> = None;
        let mut terms: Vec<(Partition, BigRational)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, coeff_str) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("missing coefficient in {line:?}")))?;
            let (letter, part_str) = head
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing basis prefix in {line:?}")))?;
            let b = letter
                .chars()
                .next()
                .and_then(Basis::from_letter)
                .filter(|_| letter.len() == 1)
                .ok_or_else(|| Error::Parse(format!("unknown basis in {line:?}")))?;
            if *basis.get_or_insert(b) != b {
                return Err(Error::Parse("mixed bases in term list".into()));
            }
            let lambda = parse_partition(part_str)?;
            let coeff = parse_rational(coeff_str)?;
            terms.push((lambda, coeff));
        }
        let mut f = SymFunc::zero(basis.unwrap_or(Basis::M), max_degree);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        Ok(f)
    }
}

fn unit_map() -> CoeffMap {
    let mut m = CoeffMap::new();
    m.insert(Partition::empty(), BigRational::one());
    m
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `3,1` / `0` (empty partition) into a [`Partition`].
pub fn parse_partition(s: &str) -> Result<Partition> {
    if s == "0" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|w| w.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return Err(Error::Parse(format!("parts not weakly decreasing in {s:?}")));
    }
    Ok(Partition::new(parts))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let parse_int =
        |w: &str| w.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {w:?}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        for (i, k) in keys.iter().enumerate() {
            let c = &self.terms[*k];
            let (sign, abs) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs.is_one() {
                write!(f, "{}[{}]", self.basis.letter(), k)?;
            } else {
                write!(f, "{}*{}[{}]", format_rational(&abs), self.basis.letter(), k)?;
            }
        }
        Ok(())
    }
}
