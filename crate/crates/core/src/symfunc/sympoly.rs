//! Sparse polynomials in finitely many variables with big-integer
//! coefficients, used as the image of symmetric functions under the
//! truncation map and as the value domain of the Hall-word products.

use super::monomial::Monomial;
use crate::partitions::Partition;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `x_1 .. x_nvars` as a sparse monomial → coefficient map.
/// Zero coefficients are never stored. Symmetry is a property of the content,
/// not the type; check it with [`SymPoly::is_symmetric`] where needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    nvars: usize,
    terms: HashMap<Monomial, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Adds `c * m`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        assert!(m.max_var() <= self.nvars, "monomial {m} exceeds {} variables", self.nvars);
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// In-place multiplication by `(1 - m)`.
    pub fn mul_one_minus(&mut self, m: &Monomial) {
        let shifted: Vec<(Monomial, BigInt)> =
            self.terms.iter().map(|(k, v)| (k.mul(m), -v)).collect();
        for (k, v) in shifted {
            self.add_term(k, v);
        }
    }

    /// Product with all monomials above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &SymPoly, max_degree: Option<u32>) -> SymPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if let Some(cap) = max_degree {
                    if d1 + m2.degree() > cap {
                        continue;
                    }
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Reinterprets the polynomial in `nvars` variables. Panics if a term
    /// uses a variable beyond the new count.
    pub fn with_nvars(&self, nvars: usize) -> SymPoly {
        assert!(
            self.terms.keys().all(|m| m.max_var() <= nvars),
            "polynomial does not fit in {nvars} variables"
        );
        SymPoly { nvars, terms: self.terms.clone() }
    }

    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars, "need one value per variable");
        let max_exp: Vec<u16> = (1..=self.nvars)
            .map(|i| self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0))
            .collect();
        let pow_tables: Vec<Vec<BigInt>> = values
            .iter()
            .zip(&max_exp)
            .map(|(v, &hi)| {
                let mut t = Vec::with_capacity(hi as usize + 1);
                t.push(BigInt::one());
                for _ in 0..hi {
                    t.push(t.last().unwrap() * v);
                }
                t
            })
            .collect();
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= &pow_tables[i][e as usize];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn apply_permutation(&self, perm: &[usize]) -> SymPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.permuted(perm), c.clone());
        }
        out
    }

    /// Full symmetry check: every orbit under variable permutations must be
    /// present with a single shared coefficient. Runs in time linear in the
    /// number of terms (orbit sizes are counted, not enumerated), but still
    /// touches every term; gate it out of hot paths.
    pub fn is_symmetric(&self) -> bool {
        let mut orbits: HashMap<Partition, (BigInt, u64)> = HashMap::new();
        for (m, c) in &self.terms {
            let key = m.sorted_type();
            if key.len() > self.nvars {
                return false;
            }
            let entry = orbits.entry(key).or_insert_with(|| (c.clone(), 0));
            if entry.0 != *c {
                return false;
            }
            entry.1 += 1;
        }
        for (key, (_, count)) in orbits {
            if BigUint::from(count) != orbit_size(&key, self.nvars) {
                return false;
            }
        }
        true
    }

    /// Elementary symmetric polynomial `e_k(x_1..x_nvars)`; zero for
    /// `k > nvars`.
    pub fn elementary(nvars: usize, k: usize) -> SymPoly {
        let mut out = Self::zero(nvars);
        if k > nvars {
            return out;
        }
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let mut exps = vec![0u16; nvars];
            for &i in &subset {
                exps[i] = 1;
            }
            out.add_term(Monomial::from_exponents(exps), BigInt::one());
            // next k-subset in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if subset[i] < nvars - (k - i) {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Power sum `p_n(x_1..x_nvars)`.
    pub fn power_sum(nvars: usize, n: u16) -> SymPoly {
        assert!(n >= 1);
        let mut out = Self::zero(nvars);
        for i in 1..=nvars {
            out.add_term(Monomial::var(i).pow(n), BigInt::one());
        }
        out
    }

    /// Complete homogeneous symmetric polynomial `h_n(x_1..x_nvars)`.
    pub fn complete_homogeneous(nvars: usize, n: u16) -> SymPoly {
        fn rec(slot: usize, nvars: usize, left: u16, cur: &mut Vec<u16>, out: &mut SymPoly) {
            if slot == nvars {
                if left == 0 {
                    out.add_term(Monomial::from_exponents(cur.clone()), BigInt::one());
                }
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(slot + 1, nvars, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Self::zero(nvars);
        rec(0, nvars, n, &mut Vec::new(), &mut out);
        out
    }

    /// Monomial symmetric polynomial `m_λ(x_1..x_nvars)`: the sum over the
    /// orbit of `x^λ`; zero when `λ` has more parts than variables.
    pub fn monomial_symmetric(nvars: usize, shape: &Partition) -> SymPoly {
        let mut out = Self::zero(nvars);
        if shape.len() > nvars {
            return out;
        }
        let mut values: Vec<u16> = shape
            .parts()
            .iter()
            .map(|&p| u16::try_from(p).expect("part too large"))
            .collect();
        values.resize(nvars, 0);
        distinct_permutations(&mut values, 0, &mut |perm| {
            out.add_term(Monomial::from_exponents(perm.to_vec()), BigInt::one());
        });
        out
    }
}

/// Number of distinct rearrangements of `λ` padded with zeros to `nvars`
/// slots: the orbit size of `x^λ` under permuting `nvars` variables.
fn orbit_size(shape: &Partition, nvars: usize) -> BigUint {
    let mut result = factorial(nvars);
    let mut run = 1usize;
    for i in 1..=shape.len() {
        if i < shape.len() && shape.parts()[i] == shape.parts()[i - 1] {
            run += 1;
        } else {
            result /= factorial(run);
            run = 1;
        }
    }
    result / factorial(nvars - shape.len())
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Calls `f` on every distinct permutation of `values[start..]`, in place.
fn distinct_permutations(values: &mut Vec<u16>, start: usize, f: &mut impl FnMut(&[u16])) {
    if start == values.len() {
        f(values);
        return;
    }
    let mut seen = Vec::new();
    for i in start..values.len() {
        if seen.contains(&values[i]) {
            continue;
        }
        seen.push(values[i]);
        values.swap(start, i);
        distinct_permutations(values, start + 1, f);
        values.swap(start, i);
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for SymPoly {
    /// Terms in descending lexicographic monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        for (i, m) in keys.iter().enumerate() {
            let c = &self.terms[*m];
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
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Monomial {
        Monomial::var(i)
    }

    #[test]
    fn elementary_term_counts() {
        for n in 0..=6usize {
            for k in 0..=7usize {
                let e = SymPoly::elementary(n, k);
                let expect = if k > n {
                    0
                } else {
                    (1..=n as u64).product::<u64>()
                        / ((1..=k as u64).product::<u64>() * (1..=(n - k) as u64).product::<u64>())
                };
                assert_eq!(e.num_terms() as u64, expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn product_of_sums_example() {
        // (x1+x2)(x1+x2) = x1^2 + 2 x1 x2 + x2^2
        let s = SymPoly::power_sum(2, 1);
        let sq = &s * &s;
        assert_eq!(sq.coeff(&x(1).pow(2)), BigInt::from(1));
        assert_eq!(sq.coeff(&x(1).mul(&x(2))), BigInt::from(2));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn mul_one_minus_matches_explicit_product() {
        let mut p = SymPoly::one(3);
        let monos = [x(1).mul(&x(2)), x(1).mul(&x(3)), x(2).mul(&x(3))];
        for m in &monos {
            p.mul_one_minus(m);
        }
        let mut q = SymPoly::one(3);
        for m in &monos {
            let mut factor = SymPoly::one(3);
            factor.add_term(m.clone(), BigInt::from(-1));
            q = &q * &factor;
        }
        assert_eq!(p, q);
        assert!(p.is_symmetric());
    }

    #[test]
    fn asymmetric_series_detected() {
        // x1 x2^2 alone is not symmetric; adding x1^2 x2 fixes it
        let mut p = SymPoly::zero(2);
        p.add_term(x(1).mul(&x(2).pow(2)), BigInt::one());
        assert!(!p.is_symmetric());
        p.add_term(x(1).pow(2).mul(&x(2)), BigInt::one());
        assert!(p.is_symmetric());
    }

    #[test]
    fn monomial_symmetric_orbit_sizes() {
        let m21 = SymPoly::monomial_symmetric(3, &Partition::new(vec![2, 1]));
        assert_eq!(m21.num_terms(), 6);
        let m11 = SymPoly::monomial_symmetric(3, &Partition::new(vec![1, 1]));
        assert_eq!(m11.num_terms(), 3);
        assert_eq!(m11, SymPoly::elementary(3, 2));
        let too_long = SymPoly::monomial_symmetric(2, &Partition::new(vec![1, 1, 1]));
        assert!(too_long.is_zero());
    }

    #[test]
    fn eval_small_polynomial() {
        // e_2(x1,x2,x3) at (1,2,3) = 2 + 3 + 6 = 11
        let e2 = SymPoly::elementary(3, 2);
        let v: Vec<BigInt> = [1, 2, 3].iter().map(|&i| BigInt::from(i)).collect();
        assert_eq!(e2.eval(&v), BigInt::from(11));
    }

    #[test]
    fn permutation_invariance_of_symmetric_polys() {
        let h3 = SymPoly::complete_homogeneous(3, 3);
        assert_eq!(h3.num_terms(), 10);
        assert_eq!(h3.apply_permutation(&[2, 0, 1]), h3);
    }

    #[test]
    fn paper_style_product_of_nonsymmetric_parts() {
        // f = Σ x_i, g = Σ_{i<j} x_i x_j^2 in 4 variables:
        // fg = Σ_{i<j} x_i^2 x_j^2 + Σ_{i<j} x_i x_j^3 + Σ_{k ≠ i<j ≠ k} x_i x_j^2 x_k
        let n = 4;
        let f = SymPoly::power_sum(n, 1);
        let mut g = SymPoly::zero(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_term(x(i).mul(&x(j).pow(2)), BigInt::one());
            }
        }
        let fg = f.mul_truncated(&g, None);

        let mut expect = SymPoly::zero(n);
        for i in 1..=n {
            for j in i + 1..=n {
                expect.add_term(x(i).pow(2).mul(&x(j).pow(2)), BigInt::one());
                expect.add_term(x(i).mul(&x(j).pow(3)), BigInt::one());
                for k in 1..=n {
                    if k != i && k != j {
                        expect.add_term(x(i).mul(&x(j).pow(2)).mul(&x(k)), BigInt::one());
                    }
                }
            }
        }
        assert_eq!(fg, expect);
    }
}
