//! Finite fields `F_{p^n}` at desk scale.
//!
//! An element is stored as an integer code: the coefficient vector
//! `(c_0, ..., c_{n-1})` of its representative polynomial in the generator `t`
//! is packed as `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`. Comparing codes is the
//! lexicographic order on coefficient sequences read from the top degree down,
//! and every "least element" choice in this crate refers to that order.
//!
//! The defining polynomial of `F_{p^n}` is the least monic irreducible of
//! degree `n`. Fields are interned per `(p, n)`, so two calls with the same
//! arguments return the same context.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest field order accepted by [`Field::new`].
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 24;

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u32 = 1 << 20;

/// An element of some [`Field`]. Only meaningful together with its field.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Fel(pub(crate) u32);

impl Fel {
    pub const ZERO: Fel = Fel(0);
    pub const ONE: Fel = Fel(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    p: u32,
    n: u32,
    q: u32,
    /// Monic defining polynomial over `F_p`, ascending coefficients.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field context. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.n == other.0.n
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.designator())
    }
}

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn embedding_cache() -> &'static Mutex<HashMap<(u32, u32, u32), Embedding>> {
    type Cache = Mutex<HashMap<(u32, u32, u32), Embedding>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldInner {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0; self.n as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.n == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let n = self.n as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[k - n + i] = (prod[k - n + i] + (p - c) * m) % p;
            }
        }
        let low: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        self.pack(&low)
    }

    fn slow_pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, a);
            }
            a = self.slow_mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        let g = (1..self.q)
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, order / l) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * (self.q as usize - 1)];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1;
        for i in 0..(self.q - 1) as usize {
            exp[i] = x;
            exp[i + self.q as usize - 1] = x;
            log[x as usize] = i as u32;
            x = self.slow_mul(x, g);
        }
        Tables { exp, log }
    }
}

fn least_irreducible(p: u32, n: u32) -> Result<Vec<u32>> {
    let prime = Field::new(p, 1)?;
    let count = (p as u64).pow(n);
    for code in 0..count {
        let mut c = code;
        let mut coeffs: Vec<Fel> = (0..n)
            .map(|_| {
                let d = (c % p as u64) as u32;
                c /= p as u64;
                Fel(d)
            })
            .collect();
        if coeffs[0].is_zero() {
            continue;
        }
        coeffs.push(Fel::ONE);
        let poly = Poly::from_coeffs(coeffs);
        if poly.is_irreducible(&prime) {
            return Ok(poly.coeffs().iter().map(|c| c.0).collect());
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {n} over F_{p}")))
}

impl Field {
    /// `F_{p^n}` with the default size bound.
    pub fn new(p: u32, n: u32) -> Result<Field> {
        Self::with_bound(p, n, DEFAULT_SIZE_BOUND)
    }

    pub fn with_bound(p: u32, n: u32, bound: u64) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= bound && q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, n, bound })?;
        if let Some(f) = field_cache().lock().unwrap().get(&(p, n)) {
            return Ok(f.clone());
        }
        let modulus = if n == 1 { vec![0, 1] } else { least_irreducible(p, n)? };
        let mut inner = FieldInner { p, n, q: q as u32, modulus, tables: None };
        if inner.q <= TABLE_LIMIT && inner.q > 2 {
            inner.tables = Some(inner.build_tables());
        }
        let f = Field(Arc::new(inner));
        Ok(field_cache().lock().unwrap().entry((p, n)).or_insert(f).clone())
    }

    /// Parses a designator `p^n` or a plain prime power such as `4`.
    pub fn from_designator(text: &str) -> Result<Field> {
        let bad = || Error::InvalidParameter(format!("bad field designator '{text}'"));
        let text = text.trim();
        if let Some((p, n)) = text.split_once('^') {
            let p: u32 = p.trim().parse().map_err(|_| bad())?;
            let n: u32 = n.trim().parse().map_err(|_| bad())?;
            return Field::new(p, n);
        }
        let q: u64 = text.parse().map_err(|_| bad())?;
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(bad());
        }
        let p = factors[0];
        let mut n = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            n += 1;
        }
        Field::new(p as u32, n)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    /// The cardinality `q = p^n`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn designator(&self) -> String {
        format!("{}^{}", self.0.p, self.0.n)
    }

    /// Defining polynomial over `F_p`, ascending coefficients, monic.
    pub fn defining_poly(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn prime_field(&self) -> Field {
        Field::new(self.0.p, 1).expect("prime subfield always exists")
    }

    pub fn elem(&self, code: u32) -> Result<Fel> {
        if code < self.0.q {
            Ok(Fel(code))
        } else {
            Err(Error::BadElement(code))
        }
    }

    pub fn zero(&self) -> Fel {
        Fel::ZERO
    }

    pub fn one(&self) -> Fel {
        Fel::ONE
    }

    /// The class of `t`, a root of the defining polynomial.
    pub fn generator(&self) -> Fel {
        if self.0.n == 1 {
            Fel::ZERO
        } else {
            Fel(self.0.p)
        }
    }

    pub fn from_int(&self, v: i64) -> Fel {
        Fel(v.rem_euclid(self.0.p as i64) as u32)
    }

    /// The least element (in code order) generating the multiplicative group.
    pub fn primitive_element(&self) -> Fel {
        let m = self.order() as u64 - 1;
        let factors = prime_factors(m);
        self.elements()
            .skip(1)
            .find(|&a| factors.iter().all(|&l| self.pow(a, m / l) != Fel::ONE))
            .expect("multiplicative group is cyclic")
    }

    /// `c_0 + c_1 t + ...`; extra coefficients beyond the degree are folded in
    /// through the defining relation.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Fel {
        let t = self.generator();
        coeffs.iter().rev().fold(Fel::ZERO, |acc, &c| self.add(self.mul(acc, t), self.from_int(c)))
    }

    pub fn coeffs(&self, a: Fel) -> Vec<u32> {
        self.0.digits(a.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fel> {
        (0..self.0.q).map(Fel)
    }

    /// Elements of the prime subfield lie at codes `0..p`.
    pub fn in_prime_field(&self, a: Fel) -> bool {
        a.0 < self.0.p
    }

    pub fn add(&self, a: Fel, b: Fel) -> Fel {
        let p = self.0.p;
        if p == 2 {
            return Fel(a.0 ^ b.0);
        }
        if self.0.n == 1 {
            return Fel((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut r, mut w) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * w;
            w *= p;
            x /= p;
            y /= p;
        }
        Fel(r)
    }

    pub fn neg(&self, a: Fel) -> Fel {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.n == 1 {
            return Fel((p - a.0) % p);
        }
        let (mut x, mut r, mut w) = (a.0, 0, 1);
        while x > 0 {
            r += ((p - x % p) % p) * w;
            w *= p;
            x /= p;
        }
        Fel(r)
    }

    pub fn sub(&self, a: Fel, b: Fel) -> Fel {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fel, b: Fel) -> Fel {
        if a.0 == 0 || b.0 == 0 {
            return Fel::ZERO;
        }
        match &self.0.tables {
            Some(t) => Fel(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => Fel(self.0.slow_mul(a.0, b.0)),
        }
    }

    pub fn square(&self, a: Fel) -> Fel {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fel, e: u64) -> Fel {
        if e == 0 {
            return Fel::ONE;
        }
        if a.0 == 0 {
            return Fel::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64 * (e % (self.0.q as u64 - 1));
                Fel(t.exp[(l % (self.0.q as u64 - 1)) as usize])
            }
            None => Fel(self.0.slow_pow(a.0, e)),
        }
    }

    pub fn inv(&self, a: Fel) -> Result<Fel> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => {
                let m = self.0.q - 1;
                Fel(t.exp[((m - t.log[a.0 as usize]) % m) as usize])
            }
            None => self.pow(a, self.0.q as u64 - 2),
        })
    }

    pub fn div(&self, a: Fel, b: Fel) -> Result<Fel> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^(base^i)` where `base = p^k` with `k | n`.
    pub fn frobenius(&self, a: Fel, base: u64, i: u64) -> Result<Fel> {
        let p = self.0.p as u64;
        let mut k = 0;
        let mut b = base;
        while b > 1 && b.is_multiple_of(p) {
            b /= p;
            k += 1;
        }
        if b != 1 || k == 0 || !self.0.n.is_multiple_of(k) {
            return Err(Error::BadFrobeniusBase(base));
        }
        let steps = i % (self.0.n / k) as u64;
        Ok((0..steps).fold(a, |x, _| self.pow(x, base)))
    }

    pub fn is_square(&self, a: Fel) -> bool {
        self.0.p == 2 || a.is_zero() || self.pow(a, (self.0.q as u64 - 1) / 2) == Fel::ONE
    }

    /// The least square root of `a`.
    pub fn sqrt(&self, a: Fel) -> Result<Fel> {
        if a.is_zero() {
            return Ok(a);
        }
        let q = self.0.q as u64;
        if self.0.p == 2 {
            return Ok(self.pow(a, q / 2));
        }
        if !self.is_square(a) {
            return Err(Error::NotASquare);
        }
        // Tonelli-Shanks
        let mut s = 0;
        let mut m = q - 1;
        while m.is_multiple_of(2) {
            m /= 2;
            s += 1;
        }
        let z = self.elements().find(|&z| !self.is_square(z)).expect("odd q has nonsquares");
        let mut c = self.pow(z, m);
        let mut x = self.pow(a, m.div_ceil(2));
        let mut t = self.pow(a, m);
        let mut ms = s;
        while t != Fel::ONE {
            let mut i = 0;
            let mut tt = t;
            while tt != Fel::ONE {
                tt = self.square(tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (ms - i - 1));
            x = self.mul(x, b);
            c = self.square(b);
            t = self.mul(t, c);
            ms = i;
        }
        Ok(x.min(self.neg(x)))
    }

    /// The least cube root of `a`, if any.
    pub fn cube_root(&self, a: Fel) -> Option<Fel> {
        if a.is_zero() {
            return Some(a);
        }
        let m = self.0.q as u64 - 1;
        if !m.is_multiple_of(3) {
            let e = (1..=2).map(|k| k * m + 1).find(|v| v % 3 == 0)? / 3;
            return Some(self.pow(a, e));
        }
        if self.pow(a, m / 3) != Fel::ONE {
            return None;
        }
        self.elements().find(|&r| self.pow(r, 3) == a)
    }

    /// Sum of `a^(p^i)` for `i < n`; lands in the prime field.
    pub fn trace_absolute(&self, a: Fel) -> Fel {
        let p = self.0.p as u64;
        let mut acc = Fel::ZERO;
        let mut x = a;
        for _ in 0..self.0.n {
            acc = self.add(acc, x);
            x = self.pow(x, p);
        }
        acc
    }

    /// Least nonsquare (odd characteristic) or least element of absolute
    /// trace one (characteristic two).
    pub fn canonical_sigma(&self) -> Fel {
        if self.0.p == 2 {
            self.elements().find(|&a| self.trace_absolute(a) == Fel::ONE)
        } else {
            self.elements().find(|&a| !self.is_square(a))
        }
        .expect("sigma always exists")
    }

    /// Least non-cube; only in characteristic two with `3 | q - 1`.
    pub fn canonical_theta(&self) -> Result<Fel> {
        if self.0.p != 2 {
            return Err(Error::Characteristic("characteristic two"));
        }
        let m = self.0.q as u64 - 1;
        if !m.is_multiple_of(3) {
            return Err(Error::NoNonCube);
        }
        Ok(self.elements().skip(1).find(|&a| self.pow(a, m / 3) != Fel::ONE).expect("a non-cube exists when 3 | q - 1"))
    }

    /// Smallest `d` with `a^(q^d) = a`, `q` the order of `base`.
    pub fn degree_over(&self, a: Fel, base: &Field) -> u32 {
        let bq = base.order() as u64;
        let mut x = self.pow(a, bq);
        let mut d = 1;
        while x != a {
            x = self.pow(x, bq);
            d += 1;
        }
        d
    }

    /// `F_{q^m}` together with the embedding of `self` into it.
    pub fn extend(&self, m: u32) -> Result<(Field, Embedding)> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let target = Field::new(self.0.p, self.0.n * m)?;
        let emb = self.embedding_into(&target)?;
        Ok((target, emb))
    }

    /// The canonical embedding into `target`: the least root of the defining
    /// polynomial that is compatible with the canonical embeddings of every
    /// intermediate subfield.
    pub fn embedding_into(&self, target: &Field) -> Result<Embedding> {
        let (p, n, tn) = (self.0.p, self.0.n, target.0.n);
        if target.0.p != p || tn % n != 0 {
            return Err(Error::NoEmbedding { p, from: n, to: tn });
        }
        if let Some(e) = embedding_cache().lock().unwrap().get(&(p, n, tn)) {
            return Ok(e.clone());
        }
        let image = if n == 1 {
            Fel::ZERO
        } else {
            let modulus = Poly::from_coeffs(self.0.modulus.iter().map(|&c| Fel(c)).collect());
            let roots = modulus.distinct_roots(target)?;
            let mut constraints = Vec::new();
            for k in (2..n).filter(|k| n % k == 0) {
                let sub = Field::new(p, k)?;
                let into_self = sub.embedding_into(self)?;
                let into_target = sub.embedding_into(target)?;
                constraints.push((into_self.apply(sub.generator()), into_target.apply(sub.generator())));
            }
            *roots
                .iter()
                .find(|&&r| constraints.iter().all(|&(a, b)| eval_code(self, target, a, r) == b))
                .ok_or_else(|| Error::Internal("no compatible embedding root".into()))?
        };
        let table: Vec<Fel> = self.elements().map(|a| eval_code(self, target, a, image)).collect();
        let preimage = table.iter().enumerate().map(|(i, &b)| (b, Fel(i as u32))).collect();
        let emb = Embedding(Arc::new(EmbeddingInner {
            source: self.clone(),
            target: target.clone(),
            image_of_generator: image,
            table,
            preimage,
        }));
        Ok(embedding_cache().lock().unwrap().entry((p, n, tn)).or_insert(emb).clone())
    }

    /// Field literal: a decimal integer in a prime field, a polynomial in `t`
    /// otherwise (`t^2+2*t+1`).
    pub fn format_elem(&self, a: Fel) -> String {
        if self.0.n == 1 {
            return a.0.to_string();
        }
        let digits = self.coeffs(a);
        let terms: Vec<String> = digits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

/// Image of `a` (an element of `source`) when `t` is sent to `root` in `target`.
fn eval_code(source: &Field, target: &Field, a: Fel, root: Fel) -> Fel {
    source.coeffs(a).iter().rev().fold(Fel::ZERO, |acc, &c| target.add(target.mul(acc, root), Fel(c)))
}

struct EmbeddingInner {
    source: Field,
    target: Field,
    image_of_generator: Fel,
    table: Vec<Fel>,
    preimage: HashMap<Fel, Fel>,
}

/// A field embedding `source -> target`, tabulated.
#[derive(Clone)]
pub struct Embedding(Arc<EmbeddingInner>);

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.0.source, self.0.target)
    }
}

impl Embedding {
    pub fn identity(f: &Field) -> Embedding {
        f.embedding_into(f).expect("identity embedding")
    }

    pub fn source(&self) -> &Field {
        &self.0.source
    }

    pub fn target(&self) -> &Field {
        &self.0.target
    }

    pub fn image_of_generator(&self) -> Fel {
        self.0.image_of_generator
    }

    /// Relative degree `[target : source]`.
    pub fn degree(&self) -> u32 {
        self.0.target.n() / self.0.source.n()
    }

    pub fn apply(&self, a: Fel) -> Fel {
        self.0.table[a.0 as usize]
    }

    pub fn preimage(&self, b: Fel) -> Option<Fel> {
        self.0.preimage.get(&b).copied()
    }
}
