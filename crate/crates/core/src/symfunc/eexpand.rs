//! Expansion of symmetric polynomials in elementary symmetric polynomials
//! (the constructive fundamental theorem of symmetric polynomials).

use super::monomial::Monomial;
use super::sympoly::SymPoly;
use super::{Basis, SymFunc};
use crate::partitions::Partition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in the elementary symmetric polynomials `e_1 .. e_nvars`,
/// stored as partition → coefficient: the key `λ` stands for
/// `e_λ = Π e_{λ_i}`, so every part satisfies `λ_1 ≤ nvars`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EExpansion {
    nvars: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl EExpansion {
    pub fn zero(nvars: usize) -> Self {
        EExpansion { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Self {
        let mut g = Self::zero(nvars);
        for (k, v) in terms {
            g.add_term(k, v);
        }
        g
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        assert!(
            lambda.part(0) as usize <= self.nvars,
            "e_{} does not exist in {} variables",
            lambda.part(0),
            self.nvars
        );
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Substitutes the elementary symmetric polynomials back in, recovering
    /// the symmetric polynomial this expansion represents.
    pub fn expand(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (lambda, c) in &self.terms {
            let mut prod = SymPoly::one(self.nvars);
            for &part in lambda.parts() {
                prod = &prod * &SymPoly::elementary(self.nvars, part as usize);
            }
            out = &out + &prod.scale(c);
        }
        out
    }

    /// Evaluates at integer values of `e_1 .. e_nvars` (`values[i]` is the
    /// value of `e_{i+1}`).
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars, "need one value per e_i");
        let mut acc = BigInt::zero();
        for (lambda, c) in &self.terms {
            let mut term = c.clone();
            for &part in lambda.parts() {
                term *= &values[(part - 1) as usize];
            }
            acc += term;
        }
        acc
    }

    /// Reads the expansion as a symmetric function in the elementary basis.
    pub fn to_symfunc(&self, max_degree: u32) -> SymFunc {
        let mut f = SymFunc::zero(Basis::E, max_degree);
        for (k, v) in &self.terms {
            f.add_term(k.clone(), BigRational::from_integer(v.clone()));
        }
        f
    }

    /// Drops every term containing `e_v` as a factor. Combined with
    /// [`EExpansion::with_nvars`] this realises the `e_r = 0` reduction.
    pub fn without_part(&self, v: u32) -> EExpansion {
        EExpansion {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.multiplicity(v) == 0)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the expansion in `nvars` variables; panics if some term
    /// uses an `e_i` with `i > nvars`.
    pub fn with_nvars(&self, nvars: usize) -> EExpansion {
        assert!(
            self.terms.keys().all(|k| k.part(0) as usize <= nvars),
            "expansion does not fit in {nvars} variables"
        );
        EExpansion { nvars, terms: self.terms.clone() }
    }

    /// Canonical text: `e:<partition> <coefficient>` lines, reverse-lex.
    pub fn canonical_text(&self) -> String {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = String::new();
        for k in keys {
            out.push_str(&format!("e:{} {}\n", k, self.terms[k]));
        }
        out
    }
}

impl fmt::Display for EExpansion {
    /// Human-readable polynomial, terms ordered by (weight, lex).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_unstable_by_key(|k| (k.weight(), k.parts().to_vec()));
        for (i, k) in keys.iter().enumerate() {
            let c = &self.terms[*k];
            let (sign, abs) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors = e_power_string(k);
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{factors}")?;
            } else {
                write!(f, "{abs}*{factors}")?;
            }
        }
        Ok(())
    }
}

/// `e_λ` as `e1^2*e3` style text.
fn e_power_string(lambda: &Partition) -> String {
    let mut pieces = Vec::new();
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == v {
            j += 1;
        }
        let mult = j - i;
        if mult == 1 {
            pieces.push(format!("e{v}"));
        } else {
            pieces.push(format!("e{v}^{mult}"));
        }
        i = j;
    }
    pieces.reverse(); // ascending e-index
    pieces.join("*")
}

/// Expands a symmetric polynomial in the elementary symmetric polynomials:
/// the unique `g` with `p = g(e_1, ..., e_r)`.
///
/// Algorithm: repeatedly take the lexicographically greatest monomial
/// `c · x^a`; symmetry forces `a` weakly decreasing; subtract
/// `c · e_1^{a_1-a_2} e_2^{a_2-a_3} ... e_r^{a_r}` and record the term. A
/// leading exponent vector that is not weakly decreasing proves the input
/// was not symmetric.
pub fn e_expand(p: &SymPoly) -> Result<EExpansion> {
    let r = p.nvars();
    let mut g = EExpansion::zero(r);
    let mut work = p.clone();
    let mut last_leading: Option<Monomial> = None;
    while !work.is_zero() {
        let leading: Monomial = work.terms().map(|(m, _)| m).max().unwrap().clone();
        if !leading.is_weakly_decreasing() {
            return Err(Error::NotSymmetric(leading.exponents().to_vec()));
        }
        if let Some(prev) = &last_leading {
            assert!(leading < *prev, "elimination failed to reduce the leading term");
        }
        let c = work.coeff(&leading);

        // exponent-difference vector -> e-partition: part i with
        // multiplicity a_i - a_{i+1}
        let mut parts: Vec<u32> = Vec::new();
        for i in 1..=r {
            let d = leading.exponent(i) - leading.exponent(i + 1);
            for _ in 0..d {
                parts.push(i as u32);
            }
        }
        let key = Partition::from_composition(parts);

        let mut subtrahend = SymPoly::constant(r, c.clone());
        for &part in key.parts() {
            subtrahend = &subtrahend * &SymPoly::elementary(r, part as usize);
        }
        work = &work - &subtrahend;
        g.add_term(key, c);
        last_leading = Some(leading);
    }
    Ok(g)
}
