//! Lyndon words and exact free Lie algebra arithmetic.
//!
//! The free Lie algebra on the index alphabet is realised inside the free
//! associative algebra (noncommutative word polynomials). Lyndon words with
//! their standard factorisation bracketings form a basis; the expansion of a
//! Lyndon bracketing is triangular with unit diagonal against the
//! lexicographic order of words, which makes conversion from a word
//! polynomial back to Lyndon coordinates a straight peeling loop.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// A multidegree in the root lattice Q, indexed by the GCM index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(pub Vec<i64>);

impl Degree {
    pub fn zero(rank: usize) -> Degree {
        Degree(vec![0; rank])
    }

    pub fn unit(i: usize, rank: usize) -> Degree {
        let mut v = vec![0; rank];
        v[i] = 1;
        Degree(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Degree {
        Degree(self.0.iter().map(|a| a * k).collect())
    }

    /// All coordinates nonnegative and at least one positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&a| a >= 0) && self.0.iter().any(|&a| a > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn neg(&self) -> Degree {
        Degree(self.0.iter().map(|a| -a).collect())
    }
}

pub type Letter = u8;
pub type Word = Vec<Letter>;

/// A noncommutative word polynomial with exact rational coefficients.
pub type WordPoly = BTreeMap<Word, BigRational>;

/// A free Lie element in Lyndon coordinates (keys are Lyndon words).
pub type LyndonVec = BTreeMap<Word, BigRational>;

pub fn word_content(w: &[Letter], rank: usize) -> Degree {
    let mut c = vec![0i64; rank];
    for &l in w {
        c[l as usize] += 1;
    }
    Degree(c)
}

/// A word is Lyndon when it is strictly smaller than each of its proper
/// suffixes.
pub fn is_lyndon(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|k| w < &w[k..])
}

/// All words with the given letter content, lexicographically sorted.
pub fn words_of_content(content: &Degree) -> Vec<Word> {
    let rank = content.rank();
    let total: i64 = content.height();
    let mut out = Vec::new();
    let mut cur: Word = Vec::with_capacity(total as usize);
    let mut left = content.0.clone();
    fn rec(rank: usize, left: &mut [i64], cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for l in 0..rank {
            if left[l] > 0 {
                left[l] -= 1;
                cur.push(l as Letter);
                rec(rank, left, cur, out);
                cur.pop();
                left[l] += 1;
            }
        }
    }
    rec(rank, &mut left, &mut cur, &mut out);
    out
}

/// Lyndon words of the given content, lexicographically sorted.
pub fn lyndon_words_of_content(content: &Degree) -> Vec<Word> {
    words_of_content(content).into_iter().filter(|w| is_lyndon(w)).collect()
}

/// Standard factorisation of a Lyndon word of length >= 2: w = uv with v the
/// longest proper Lyndon suffix.
pub fn std_factorization(w: &[Letter]) -> (Word, Word) {
    debug_assert!(w.len() >= 2 && is_lyndon(w));
    for k in 1..w.len() {
        if is_lyndon(&w[k..]) {
            return (w[..k].to_vec(), w[k..].to_vec());
        }
    }
    unreachable!("every Lyndon word of length >= 2 factorises")
}

/// Memo table for Lyndon bracketing expansions.
#[derive(Default)]
pub struct ExpansionCache {
    map: HashMap<Word, BTreeMap<Word, BigInt>>,
}

impl ExpansionCache {
    /// Expansion of the standard bracketing of a Lyndon word in the word
    /// algebra. Integer coefficients; leading (lex-smallest) word is w itself
    /// with coefficient 1.
    pub fn expand(&mut self, w: &[Letter]) -> BTreeMap<Word, BigInt> {
        if let Some(p) = self.map.get(w) {
            return p.clone();
        }
        let poly = if w.len() == 1 {
            let mut m = BTreeMap::new();
            m.insert(w.to_vec(), BigInt::one());
            m
        } else {
            let (u, v) = std_factorization(w);
            let pu = self.expand(&u);
            let pv = self.expand(&v);
            let mut m: BTreeMap<Word, BigInt> = BTreeMap::new();
            for (wu, cu) in &pu {
                for (wv, cv) in &pv {
                    let mut ab = wu.clone();
                    ab.extend_from_slice(wv);
                    let mut ba = wv.clone();
                    ba.extend_from_slice(wu);
                    let c = cu * cv;
                    add_int(&mut m, ab, c.clone());
                    add_int(&mut m, ba, -c);
                }
            }
            m
        };
        debug_assert_eq!(poly.iter().next().map(|(k, v)| (k.clone(), v.clone())), Some((w.to_vec(), BigInt::one())));
        self.map.insert(w.to_vec(), poly.clone());
        poly
    }
}

fn add_int(m: &mut BTreeMap<Word, BigInt>, k: Word, v: BigInt) {
    use std::collections::btree_map::Entry;
    match m.entry(k) {
        Entry::Vacant(e) => {
            if !v.is_zero() {
                e.insert(v);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Add `c` times the single word `w` into a polynomial.
pub fn poly_add_term(m: &mut WordPoly, w: Word, c: BigRational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match m.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn poly_add_scaled(dst: &mut WordPoly, src: &WordPoly, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    for (w, x) in src {
        let e = dst.entry(w.clone()).or_insert_with(BigRational::zero);
        *e += x * c;
        if e.is_zero() {
            dst.remove(w);
        }
    }
}

/// Expand a Lyndon-coordinate vector into a word polynomial.
pub fn lyndon_to_poly(lv: &LyndonVec, cache: &mut ExpansionCache) -> WordPoly {
    let mut out = WordPoly::new();
    for (w, c) in lv {
        let p = cache.expand(w);
        for (pw, pc) in &p {
            let e = out.entry(pw.clone()).or_insert_with(BigRational::zero);
            *e += BigRational::from_integer(pc.clone()) * c;
            if e.is_zero() {
                out.remove(pw);
            }
        }
    }
    out
}

/// Peel a (Lie-element) word polynomial back into Lyndon coordinates.
/// Panics when the polynomial is not in the span of Lyndon bracketings.
pub fn poly_to_lyndon(mut poly: WordPoly, cache: &mut ExpansionCache) -> LyndonVec {
    let mut out = LyndonVec::new();
    while let Some((w, c)) = poly.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
        assert!(is_lyndon(&w), "word polynomial is not a Lie element: leading word {:?}", w);
        let p = cache.expand(&w);
        for (pw, pc) in &p {
            let e = poly.entry(pw.clone()).or_insert_with(BigRational::zero);
            *e -= BigRational::from_integer(pc.clone()) * &c;
            if e.is_zero() {
                poly.remove(pw);
            }
        }
        out.insert(w, c);
    }
    out
}

/// Lie bracket of two free Lie elements in Lyndon coordinates.
pub fn free_bracket(a: &LyndonVec, b: &LyndonVec, cache: &mut ExpansionCache) -> LyndonVec {
    let pa = lyndon_to_poly(a, cache);
    let pb = lyndon_to_poly(b, cache);
    let mut prod = WordPoly::new();
    for (wa, ca) in &pa {
        for (wb, cb) in &pb {
            let c = ca * cb;
            let mut ab = wa.clone();
            ab.extend_from_slice(wb);
            poly_add_term(&mut prod, ab, c.clone());
            let mut ba = wb.clone();
            ba.extend_from_slice(wa);
            poly_add_term(&mut prod, ba, -c);
        }
    }
    poly_to_lyndon(prod, cache)
}

/// Single generator as a Lyndon vector.
pub fn generator(i: usize) -> LyndonVec {
    let mut m = LyndonVec::new();
    m.insert(vec![i as Letter], BigRational::one());
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(v: &[i64]) -> Degree {
        Degree(v.to_vec())
    }

    #[test]
    fn lyndon_counts_match_witt() {
        // Witt numbers for a 2-letter alphabet: 2, 1, 2, 3, 6, 9, 18, 30.
        let witt = [2usize, 1, 2, 3, 6, 9, 18, 30];
        for n in 1..=8i64 {
            let mut count = 0;
            for a in 0..=n {
                count += lyndon_words_of_content(&deg(&[a, n - a])).len();
            }
            assert_eq!(count, witt[(n - 1) as usize], "total degree {}", n);
        }
    }

    #[test]
    fn expansion_triangular() {
        let mut cache = ExpansionCache::default();
        // [1,[1,2]] = 112 - 2*121 + 211
        let p = cache.expand(&[0, 0, 1]);
        let terms: Vec<(Word, BigInt)> = p.into_iter().collect();
        assert_eq!(
            terms,
            vec![
                (vec![0, 0, 1], BigInt::from(1)),
                (vec![0, 1, 0], BigInt::from(-2)),
                (vec![1, 0, 0], BigInt::from(1)),
            ]
        );
    }

    #[test]
    fn bracket_and_peel_round_trip() {
        let mut cache = ExpansionCache::default();
        let e0 = generator(0);
        let e1 = generator(1);
        let b = free_bracket(&e0, &e1, &mut cache);
        assert_eq!(b.len(), 1);
        assert!(b.contains_key(&vec![0u8, 1u8]));
        // [e1, e0] = -[01]
        let c = free_bracket(&e1, &e0, &mut cache);
        assert_eq!(c.get(&vec![0u8, 1u8]).unwrap(), &BigRational::from_integer(BigInt::from(-1)));
        // Jacobi: [[e0,e1],e1] + [[e1,e1],e0] + ... spot-check antisymmetry of a nested bracket.
        let bb = free_bracket(&b, &e1, &mut cache);
        let cc = free_bracket(&e1, &b, &mut cache);
        let sum: LyndonVec = {
            let mut s = bb.clone();
            for (k, v) in &cc {
                let e = s.entry(k.clone()).or_insert_with(BigRational::zero);
                *e += v;
                if e.is_zero() {
                    s.remove(k);
                }
            }
            s
        };
        assert!(sum.is_empty());
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(std_factorization(&[0, 0, 1]), (vec![0], vec![0, 1]));
        assert_eq!(std_factorization(&[0, 1, 1]), (vec![0, 1], vec![1]));
        assert!(is_lyndon(&[0, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 1, 0]));
    }
}
