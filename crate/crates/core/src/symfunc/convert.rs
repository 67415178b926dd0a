//! Basis-change kernels for symmetric functions.
//!
//! The power-sum basis is the internal hub: a product of power sums is a key
//! concatenation, so arithmetic stays cheap there. Kernels:
//!
//! - Newton recurrences between e/h and p,
//! - Murnaghan–Nakayama characters between s and p,
//! - a monomial-times-power-sum product rule for p -> m,
//! - triangular elimination for m -> p,
//! - Jacobi–Trudi determinants for s -> h and (dual) s -> e.
//!
//! Memo tables are guarded by mutexes; concurrent callers always observe the
//! same values as a serial run.

use crate::partitions::{partitions_of, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

/// Coefficient map over partition keys; the basis giving the keys meaning is
/// tracked by the caller.
pub(crate) type CoeffMap = BTreeMap<Partition, BigRational>;
pub(crate) type IntMap = BTreeMap<Partition, BigInt>;

pub(crate) fn rat_int(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

pub(crate) fn add_scaled(dst: &mut CoeffMap, key: Partition, value: BigRational) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match dst.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(value);
        }
    }
}

/// Concatenation of two partitions (multiset union of parts).
pub(crate) fn concat(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    Partition::from_composition(parts)
}

/// Product of two coefficient maps over a multiplicative basis (p, e or h):
/// keys concatenate, coefficients multiply. Terms above `cap` are dropped.
pub(crate) fn map_mul(a: &CoeffMap, b: &CoeffMap, cap: Option<u32>) -> CoeffMap {
    let mut out = CoeffMap::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            if let Some(c) = cap {
                if ka.weight() + kb.weight() > c {
                    continue;
                }
            }
            add_scaled(&mut out, concat(ka, kb), va * vb);
        }
    }
    out
}

fn append_part(map: &CoeffMap, part: u32) -> CoeffMap {
    let single = Partition::new(vec![part]);
    map.iter()
        .map(|(k, v)| (concat(k, &single), v.clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// Newton recurrences
// ---------------------------------------------------------------------------

fn e_in_p_cache() -> &'static Mutex<HashMap<u32, CoeffMap>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CoeffMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `e_n` in the power-sum basis:
/// `e_n = (-1)^{n-1}/n * (p_n + Σ_{i=1}^{n-1} (-1)^i e_i p_{n-i})`.
pub(crate) fn e_in_p(n: u32) -> CoeffMap {
    if n == 0 {
        let mut m = CoeffMap::new();
        m.insert(Partition::empty(), BigRational::one());
        return m;
    }
    if let Some(hit) = e_in_p_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut acc = CoeffMap::new();
    add_scaled(&mut acc, Partition::new(vec![n]), BigRational::one());
    for i in 1..n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let term = append_part(&e_in_p(i), n - i);
        for (k, v) in term {
            add_scaled(&mut acc, k, v * rat_int(sign));
        }
    }
    let outer = rat_int(if n % 2 == 1 { 1 } else { -1 }) / rat_int(n as i64);
    let result: CoeffMap = acc.into_iter().map(|(k, v)| (k, v * &outer)).collect();
    e_in_p_cache().lock().unwrap().insert(n, result.clone());
    result
}

fn h_in_p_cache() -> &'static Mutex<HashMap<u32, CoeffMap>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CoeffMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `h_n` in the power-sum basis: `h_n = (1/n) Σ_{i=1}^{n} p_i h_{n-i}`.
pub(crate) fn h_in_p(n: u32) -> CoeffMap {
    if n == 0 {
        let mut m = CoeffMap::new();
        m.insert(Partition::empty(), BigRational::one());
        return m;
    }
    if let Some(hit) = h_in_p_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut acc = CoeffMap::new();
    for i in 1..=n {
        let term = append_part(&h_in_p(n - i), i);
        for (k, v) in term {
            add_scaled(&mut acc, k, v);
        }
    }
    let inv_n = BigRational::one() / rat_int(n as i64);
    let result: CoeffMap = acc.into_iter().map(|(k, v)| (k, v * &inv_n)).collect();
    h_in_p_cache().lock().unwrap().insert(n, result.clone());
    result
}

fn p_in_e_cache() -> &'static Mutex<HashMap<u32, CoeffMap>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CoeffMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `p_n` in the elementary basis (keys read as e_λ):
/// `p_n = Σ_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n`.
pub(crate) fn p_in_e(n: u32) -> CoeffMap {
    assert!(n >= 1);
    if let Some(hit) = p_in_e_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut acc = CoeffMap::new();
    let lead = rat_int(if n % 2 == 1 { n as i64 } else { -(n as i64) });
    add_scaled(&mut acc, Partition::new(vec![n]), lead);
    for i in 1..n {
        let sign = rat_int(if i % 2 == 1 { 1 } else { -1 });
        for (k, v) in append_part(&p_in_e(n - i), i) {
            add_scaled(&mut acc, k, v * &sign);
        }
    }
    p_in_e_cache().lock().unwrap().insert(n, acc.clone());
    acc
}

fn p_in_h_cache() -> &'static Mutex<HashMap<u32, CoeffMap>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CoeffMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `p_n` in the homogeneous basis: `p_n = n h_n - Σ_{i=1}^{n-1} p_i h_{n-i}`.
pub(crate) fn p_in_h(n: u32) -> CoeffMap {
    assert!(n >= 1);
    if let Some(hit) = p_in_h_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut acc = CoeffMap::new();
    add_scaled(&mut acc, Partition::new(vec![n]), rat_int(n as i64));
    for i in 1..n {
        for (k, v) in append_part(&p_in_h(i), n - i) {
            add_scaled(&mut acc, k, -v);
        }
    }
    p_in_h_cache().lock().unwrap().insert(n, acc.clone());
    acc
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama characters
// ---------------------------------------------------------------------------

fn character_cache() -> &'static Mutex<HashMap<(Partition, Partition), BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible symmetric-group character `χ^λ(μ)` by border-strip removal
/// over beta numbers.
pub(crate) fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.weight() != mu.weight() {
        return BigInt::zero();
    }
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = character_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }

    let t = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let len = lambda.len();
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();

    let mut acc = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < t || beta.contains(&(b - t)) {
            continue;
        }
        let target = b - t;
        let height = beta.iter().filter(|&&e| e > target && e < b).count();
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, c| c.cmp(a));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &e)| e - (len - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = character(&Partition::new(parts), &rest);
        if height % 2 == 0 {
            acc += sub;
        } else {
            acc -= sub;
        }
    }

    character_cache().lock().unwrap().insert(key, acc.clone());
    acc
}

/// `s_λ` in the power-sum basis: `Σ_{μ ⊢ |λ|} χ^λ(μ)/z_μ · p_μ`.
pub(crate) fn s_in_p(lambda: &Partition) -> CoeffMap {
    let mut out = CoeffMap::new();
    for mu in partitions_of(lambda.weight()) {
        let chi = character(lambda, &mu);
        if chi.is_zero() {
            continue;
        }
        let z = BigInt::from(mu.centralizer_order());
        out.insert(mu, BigRational::new(chi, z));
    }
    out
}

/// Rewrites a power-sum coefficient map in the Schur basis via
/// `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub(crate) fn p_map_to_s(pmap: &CoeffMap) -> CoeffMap {
    let mut out = CoeffMap::new();
    for (mu, d) in pmap {
        for lambda in partitions_of(mu.weight()) {
            let chi = character(&lambda, mu);
            if !chi.is_zero() {
                add_scaled(&mut out, lambda, d * BigRational::from_integer(chi));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// p <-> m
// ---------------------------------------------------------------------------

fn p_to_m_cache() -> &'static Mutex<HashMap<Partition, IntMap>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, IntMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One step of the monomial expansion: multiply an m-basis map by `p_n`.
/// For each key `μ` and each distinct part value `u` of `μ` (plus `u = 0`
/// for appending), the product contributes to `ν = μ - u + (u + n)` with
/// multiplier `mult_{u+n}(ν)`.
fn m_map_mul_p(map: &IntMap, n: u32) -> IntMap {
    let mut out = IntMap::new();
    for (mu, c) in map {
        let mut values: Vec<u32> = mu.parts().to_vec();
        values.dedup();
        values.push(0);
        for &u in &values {
            let mut parts: Vec<u32> = mu.parts().to_vec();
            if u > 0 {
                let pos = parts.iter().position(|&p| p == u).unwrap();
                parts.remove(pos);
            }
            parts.push(u + n);
            let nu = Partition::from_composition(parts);
            let mult = BigInt::from(nu.multiplicity(u + n) as u64);
            let entry = out.entry(nu).or_insert_with(BigInt::zero);
            *entry += c * mult;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `p_λ` expanded in the monomial basis (integral).
pub(crate) fn p_in_m(lambda: &Partition) -> IntMap {
    if let Some(hit) = p_to_m_cache().lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let mut map = IntMap::new();
    map.insert(Partition::empty(), BigInt::one());
    for &part in lambda.parts() {
        map = m_map_mul_p(&map, part);
    }
    p_to_m_cache()
        .lock()
        .unwrap()
        .insert(lambda.clone(), map.clone());
    map
}

/// Diagonal coefficient of `p_μ` on `m_μ`: the product of factorials of the
/// part multiplicities.
fn diagonal_factor(mu: &Partition) -> BigInt {
    let mut f = BigInt::one();
    let mut run = 0u64;
    let mut prev = None;
    for &p in mu.parts() {
        if Some(p) == prev {
            run += 1;
        } else {
            run = 1;
            prev = Some(p);
        }
        f *= BigInt::from(run);
    }
    f
}

/// Monomial-basis map rewritten in the power-sum basis by triangular
/// elimination: `p_μ` hits `m_μ` with the diagonal factor and otherwise only
/// lexicographically larger keys, so eliminating keys in ascending order
/// terminates.
pub(crate) fn m_map_to_p(f: &CoeffMap) -> CoeffMap {
    let mut work = f.clone();
    let mut out = CoeffMap::new();
    while let Some((mu, c)) = work.pop_first() {
        if c.is_zero() {
            continue;
        }
        let d = c / BigRational::from_integer(diagonal_factor(&mu));
        for (nu, coeff) in p_in_m(&mu) {
            if nu == mu {
                continue;
            }
            let entry = work.entry(nu).or_insert_with(BigRational::zero);
            *entry -= &d * BigRational::from_integer(coeff);
        }
        add_scaled(&mut out, mu, d);
    }
    out
}

/// Power-sum coefficient map rewritten in the monomial basis.
pub(crate) fn p_map_to_m(pmap: &CoeffMap) -> CoeffMap {
    let mut out = CoeffMap::new();
    for (lambda, d) in pmap {
        for (nu, coeff) in p_in_m(lambda) {
            add_scaled(&mut out, nu, d * BigRational::from_integer(coeff));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Jacobi–Trudi
// ---------------------------------------------------------------------------

/// Calls `f(perm, parity)` for every permutation of `0..n`.
fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize], bool)) {
    fn rec(perm: &mut Vec<usize>, used: &mut Vec<bool>, even: bool, f: &mut impl FnMut(&[usize], bool)) {
        let n = used.len();
        if perm.len() == n {
            f(perm, even);
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // placing v now inverts against every smaller value placed later
            let inversions = (0..v).filter(|&w| !used[w]).count();
            let flips = inversions % 2 == 1;
            used[v] = true;
            perm.push(v);
            rec(perm, used, even ^ flips, f);
            perm.pop();
            used[v] = false;
        }
    }
    rec(&mut Vec::new(), &mut vec![false; n], true, f);
}

/// `s_λ` in the homogeneous basis via the Jacobi–Trudi determinant
/// `det(h_{λ_i - i + j})_{1 ≤ i,j ≤ ℓ}`.
pub(crate) fn s_in_h(lambda: &Partition) -> IntMap {
    let len = lambda.len();
    let mut out = IntMap::new();
    if len == 0 {
        out.insert(Partition::empty(), BigInt::one());
        return out;
    }
    for_each_permutation(len, &mut |perm, even| {
        let mut parts: Vec<u32> = Vec::with_capacity(len);
        for (i, &j) in perm.iter().enumerate() {
            let idx = lambda.parts()[i] as i64 - i as i64 + j as i64 - 0;
            match idx.cmp(&0) {
                std::cmp::Ordering::Less => return,
                std::cmp::Ordering::Equal => {} // h_0 = 1
                std::cmp::Ordering::Greater => parts.push(idx as u32),
            }
        }
        let key = Partition::from_composition(parts);
        let entry = out.entry(key).or_insert_with(BigInt::zero);
        if even {
            *entry += 1;
        } else {
            *entry -= 1;
        }
    });
    out.retain(|_, v| !v.is_zero());
    out
}

/// `s_λ` in the elementary basis via the dual Jacobi–Trudi determinant
/// (Jacobi–Trudi on the conjugate shape).
pub(crate) fn s_in_e(lambda: &Partition) -> IntMap {
    s_in_h(&lambda.conjugate())
}

/// Parity note for `for_each_permutation`: `perm[i] = j` means the matrix
/// entry in row `i` takes column `j`.
#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn int_term(parts: &[u32], c: i64) -> (Partition, BigRational) {
        (p(parts), rat_int(c))
    }

    #[test]
    fn e_in_p_small() {
        // e_2 = (p_1^2 - p_2)/2
        let e2 = e_in_p(2);
        assert_eq!(e2.len(), 2);
        assert_eq!(e2[&p(&[1, 1])], rat_int(1) / rat_int(2));
        assert_eq!(e2[&p(&[2])], rat_int(-1) / rat_int(2));
        // e_3 = p_1^3/6 - p_1 p_2 / 2 + p_3/3
        let e3 = e_in_p(3);
        assert_eq!(e3[&p(&[1, 1, 1])], rat_int(1) / rat_int(6));
        assert_eq!(e3[&p(&[2, 1])], rat_int(-1) / rat_int(2));
        assert_eq!(e3[&p(&[3])], rat_int(1) / rat_int(3));
    }

    #[test]
    fn h_in_p_small() {
        // h_2 = (p_1^2 + p_2)/2
        let h2 = h_in_p(2);
        assert_eq!(h2[&p(&[1, 1])], rat_int(1) / rat_int(2));
        assert_eq!(h2[&p(&[2])], rat_int(1) / rat_int(2));
    }

    #[test]
    fn p_in_e_small() {
        // p_2 = e_1^2 - 2 e_2
        let p2 = p_in_e(2);
        assert_eq!(p2[&p(&[1, 1])], rat_int(1));
        assert_eq!(p2[&p(&[2])], rat_int(-2));
        // p_3 = e_1^3 - 3 e_1 e_2 + 3 e_3
        let p3 = p_in_e(3);
        assert_eq!(p3[&p(&[1, 1, 1])], rat_int(1));
        assert_eq!(p3[&p(&[2, 1])], rat_int(-3));
        assert_eq!(p3[&p(&[3])], rat_int(3));
    }

    #[test]
    fn p_in_h_small() {
        // p_2 = 2 h_2 - h_1^2
        let p2 = p_in_h(2);
        assert_eq!(p2[&p(&[2])], rat_int(2));
        assert_eq!(p2[&p(&[1, 1])], rat_int(-1));
    }

    #[test]
    fn newton_pairs_invert_each_other() {
        // substituting p_in_e into e_in_p must give the identity
        for n in 1..=8u32 {
            let en = e_in_p(n);
            let mut back = CoeffMap::new();
            for (mu, c) in &en {
                let mut prod = CoeffMap::new();
                prod.insert(Partition::empty(), BigRational::one());
                for &part in mu.parts() {
                    prod = map_mul(&prod, &p_in_e(part), None);
                }
                for (k, v) in prod {
                    add_scaled(&mut back, k, v * c);
                }
            }
            let expect: CoeffMap = [int_term(&[n], 1)].into_iter().collect();
            assert_eq!(back, expect, "n={n}");
        }
    }

    #[test]
    fn characters_of_s3_and_s4() {
        // S_3 character table rows (3), (2,1), (1,1,1) at classes (1^3),(2,1),(3)
        let classes3 = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])];
        let expect3: [(&[u32], [i64; 3]); 3] = [
            (&[3], [1, 1, 1]),
            (&[2, 1], [2, 0, -1]),
            (&[1, 1, 1], [1, -1, 1]),
        ];
        for (shape, row) in expect3 {
            for (cls, val) in classes3.iter().zip(row) {
                assert_eq!(character(&p(shape), cls), BigInt::from(val), "{shape:?} {cls}");
            }
        }
        // spot checks in S_4
        assert_eq!(character(&p(&[2, 2]), &p(&[1, 1, 1, 1])), BigInt::from(2));
        assert_eq!(character(&p(&[2, 2]), &p(&[2, 1, 1])), BigInt::from(0));
        assert_eq!(character(&p(&[2, 2]), &p(&[2, 2])), BigInt::from(2));
        assert_eq!(character(&p(&[2, 2]), &p(&[3, 1])), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 2]), &p(&[4])), BigInt::from(0));
        assert_eq!(character(&p(&[3, 1]), &p(&[4])), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 1, 1]), &p(&[4])), BigInt::from(1));
    }

    #[test]
    fn character_orthogonality_up_to_weight_six() {
        // first orthogonality: Σ_μ χ^λ(μ) χ^κ(μ) / z_μ = δ_{λκ}
        for n in 1..=6u32 {
            let shapes = partitions_of(n);
            for a in &shapes {
                for b in &shapes {
                    let mut acc = BigRational::zero();
                    for mu in partitions_of(n) {
                        let prod = character(a, &mu) * character(b, &mu);
                        acc += BigRational::new(prod, BigInt::from(mu.centralizer_order()));
                    }
                    let expect = if a == b { rat_int(1) } else { rat_int(0) };
                    assert_eq!(acc, expect, "n={n} λ={a} κ={b}");
                }
            }
        }
    }

    #[test]
    fn p_in_m_examples() {
        // p_{1,1} = m_2 + 2 m_{1,1}
        let m = p_in_m(&p(&[1, 1]));
        assert_eq!(m[&p(&[2])], BigInt::from(1));
        assert_eq!(m[&p(&[1, 1])], BigInt::from(2));
        // p_{1,1,1} = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
        let m3 = p_in_m(&p(&[1, 1, 1]));
        assert_eq!(m3[&p(&[3])], BigInt::from(1));
        assert_eq!(m3[&p(&[2, 1])], BigInt::from(3));
        assert_eq!(m3[&p(&[1, 1, 1])], BigInt::from(6));
        // p_{2,2} = m_4 + 2 m_{2,2}
        let m22 = p_in_m(&p(&[2, 2]));
        assert_eq!(m22[&p(&[4])], BigInt::from(1));
        assert_eq!(m22[&p(&[2, 2])], BigInt::from(2));
        assert_eq!(m22.len(), 2);
    }

    #[test]
    fn p_in_m_matches_explicit_polynomial_expansion() {
        use crate::symfunc::sympoly::SymPoly;
        for n in 1..=7u32 {
            for lambda in partitions_of(n) {
                let nvars = n as usize;
                let mut poly = SymPoly::one(nvars);
                for &part in lambda.parts() {
                    poly = &poly * &SymPoly::power_sum(nvars, part as u16);
                }
                let mut from_rule = SymPoly::zero(nvars);
                for (nu, c) in p_in_m(&lambda) {
                    let m_poly = SymPoly::monomial_symmetric(nvars, &nu);
                    from_rule = &from_rule + &m_poly.scale(&c);
                }
                assert_eq!(poly, from_rule, "λ={lambda}");
            }
        }
    }

    #[test]
    fn m_to_p_round_trip() {
        for n in 0..=7u32 {
            for lambda in partitions_of(n) {
                let mut m = CoeffMap::new();
                m.insert(lambda.clone(), BigRational::one());
                let pm = m_map_to_p(&m);
                let back = p_map_to_m(&pm);
                assert_eq!(back, m, "λ={lambda}");
            }
        }
    }

    #[test]
    fn jacobi_trudi_small_shapes() {
        // s_{2,1} = h_{2,1} - h_3
        let s21 = s_in_h(&p(&[2, 1]));
        assert_eq!(s21[&p(&[2, 1])], BigInt::from(1));
        assert_eq!(s21[&p(&[3])], BigInt::from(-1));
        assert_eq!(s21.len(), 2);
        // s_{1,1} = h_{1,1} - h_2
        let s11 = s_in_h(&p(&[1, 1]));
        assert_eq!(s11[&p(&[1, 1])], BigInt::from(1));
        assert_eq!(s11[&p(&[2])], BigInt::from(-1));
        // dual: s_2 in e = e_{1,1} - e_2
        let s2e = s_in_e(&p(&[2]));
        assert_eq!(s2e[&p(&[1, 1])], BigInt::from(1));
        assert_eq!(s2e[&p(&[2])], BigInt::from(-1));
        // e_k = s_{1^k}: dual JT of a column is a single e
        let col = s_in_e(&p(&[1, 1, 1]));
        assert_eq!(col.len(), 1);
        assert_eq!(col[&p(&[3])], BigInt::from(1));
    }

    #[test]
    fn jacobi_trudi_agrees_with_characters() {
        // expand s_in_h through h_in_p and compare against s_in_p
        for n in 1..=6u32 {
            for lambda in partitions_of(n) {
                let via_jt = {
                    let mut acc = CoeffMap::new();
                    for (mu, c) in s_in_h(&lambda) {
                        let mut prod = CoeffMap::new();
                        prod.insert(Partition::empty(), BigRational::one());
                        for &part in mu.parts() {
                            prod = map_mul(&prod, &h_in_p(part), None);
                        }
                        for (k, v) in prod {
                            add_scaled(&mut acc, k, v * BigRational::from_integer(c.clone()));
                        }
                    }
                    acc
                };
                assert_eq!(via_jt, s_in_p(&lambda), "λ={lambda}");
            }
        }
    }
}
