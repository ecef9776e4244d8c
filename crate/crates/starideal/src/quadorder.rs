//! Quadratic-order backend: exact lattice arithmetic for fractional ideals of
//! the order ℤ + fωℤ in ℚ(√N), where ω = (1+√N)/2 if N ≡ 1 (mod 4) and
//! ω = √N otherwise.
//!
//! Writing θ = fω, the order has ℤ-basis (1, θ) and θ² = tθ + n with integer
//! t, n. A fractional ideal is stored as a positive rational scale times a
//! primitive integer lattice in Hermite form with columns (a, 0) and (b, g)
//! over the basis (1, θ), 0 ≤ b < a. This form is unique, so equality is
//! structural. Every stored lattice is closed under multiplication by θ.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::system::{IdealSystem, SampleBounds};

#[derive(Debug, PartialEq, Eq)]
pub struct QuadraticOrder {
    n_field: i64,
    conductor: u64,
    /// θ² = t·θ + n.
    t: BigInt,
    n: BigInt,
}

impl fmt::Display for QuadraticOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "qo(N={},f={})", self.n_field, self.conductor)
    }
}

fn is_squarefree(n: i64) -> bool {
    if n == 0 || n == 1 {
        return false;
    }
    let mut m = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl QuadraticOrder {
    pub fn new(n_field: i64, conductor: u64) -> Result<Arc<QuadraticOrder>> {
        if !is_squarefree(n_field) {
            return Err(Error::NotSquarefree(n_field));
        }
        if conductor == 0 {
            return Err(Error::InvalidIdeal("conductor must be positive".into()));
        }
        let f = BigInt::from(conductor);
        let (t, n) = if n_field.rem_euclid(4) == 1 {
            // ω = (1+√N)/2, ω² = ω + (N−1)/4
            (f.clone(), &f * &f * BigInt::from((n_field - 1) / 4))
        } else {
            (BigInt::zero(), &f * &f * BigInt::from(n_field))
        };
        Ok(Arc::new(QuadraticOrder {
            n_field,
            conductor,
            t,
            n,
        }))
    }

    pub fn field_root(&self) -> i64 {
        self.n_field
    }
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The maximal order of the same field.
    pub fn maximal_order(&self) -> Arc<QuadraticOrder> {
        QuadraticOrder::new(self.n_field, 1).expect("N already validated")
    }

    fn imaginary(&self) -> bool {
        self.n_field < 0
    }
}

/// Element x + yθ of the quotient field, exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadElem {
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadElem {
    pub fn new(x: BigRational, y: BigRational) -> QuadElem {
        QuadElem { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> QuadElem {
        QuadElem {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    fn mul(&self, other: &QuadElem, ord: &QuadraticOrder) -> QuadElem {
        // (x1 + y1θ)(x2 + y2θ) = x1x2 + n·y1y2 + (x1y2 + x2y1 + t·y1y2)θ
        let yy = &self.y * &other.y;
        QuadElem {
            x: &self.x * &other.x + &yy * BigRational::from_integer(ord.n.clone()),
            y: &self.x * &other.y
                + &other.x * &self.y
                + &yy * BigRational::from_integer(ord.t.clone()),
        }
    }

    fn conj(&self, ord: &QuadraticOrder) -> QuadElem {
        // the conjugate of θ is t − θ
        QuadElem {
            x: &self.x + &self.y * BigRational::from_integer(ord.t.clone()),
            y: -self.y.clone(),
        }
    }

    pub fn norm(&self, ord: &QuadraticOrder) -> BigRational {
        // N(x + yθ) = x² + t·xy − n·y²
        &self.x * &self.x + &self.x * &self.y * BigRational::from_integer(ord.t.clone())
            - &self.y * &self.y * BigRational::from_integer(ord.n.clone())
    }

    fn inv(&self, ord: &QuadraticOrder) -> QuadElem {
        let nrm = self.norm(ord);
        assert!(!nrm.is_zero(), "inverse of zero element");
        let c = self.conj(ord);
        QuadElem {
            x: c.x / nrm.clone(),
            y: c.y / nrm,
        }
    }
}

/// Fractional ideal in canonical form `scale · (aℤ ⊕ (b + gθ)ℤ)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QoIdeal {
    scale: BigRational,
    a: BigInt,
    b: BigInt,
    g: BigInt,
}

impl fmt::Debug for QoIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QoIdeal({} * [[{},{}],[0,{}]])",
            self.scale, self.a, self.b, self.g
        )
    }
}

impl QoIdeal {
    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    /// Hermite form columns (a, 0) and (b, g).
    pub fn hnf(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.g)
    }

    /// Basis as field elements.
    fn basis(&self) -> [QuadElem; 2] {
        [
            QuadElem::new(
                &self.scale * BigRational::from_integer(self.a.clone()),
                BigRational::zero(),
            ),
            QuadElem::new(
                &self.scale * BigRational::from_integer(self.b.clone()),
                &self.scale * BigRational::from_integer(self.g.clone()),
            ),
        ]
    }

    /// Exact membership.
    pub fn contains(&self, e: &QuadElem) -> bool {
        let xr = &e.x / &self.scale;
        let yr = &e.y / &self.scale;
        if !yr.is_integer() {
            return false;
        }
        let q = yr.to_integer();
        let (qd, r) = q.div_rem(&self.g);
        if !r.is_zero() {
            return false;
        }
        let xres = xr - BigRational::from_integer(&qd * &self.b);
        xres.is_integer() && (xres.to_integer() % &self.a).is_zero()
    }

    /// `|det| · scale²`.
    pub fn norm(&self) -> BigRational {
        &self.scale * &self.scale * BigRational::from_integer(&self.a * &self.g)
    }
}

/// The quadratic-order ideal system.
#[derive(Clone, Debug)]
pub struct Qo(pub Arc<QuadraticOrder>);

impl Qo {
    pub fn new(n_field: i64, conductor: u64) -> Result<Qo> {
        Ok(Qo(QuadraticOrder::new(n_field, conductor)?))
    }

    pub fn order(&self) -> &Arc<QuadraticOrder> {
        &self.0
    }

    /// Canonicalizes the lattice spanned by rational vectors (x, y) over the
    /// basis (1, θ). Errors when the span has rank < 2. Does not check
    /// θ-closure; raw user input goes through [`Qo::hnf_ideal`].
    fn canonicalize(&self, vecs: &[(BigRational, BigRational)]) -> Result<QoIdeal> {
        // clear denominators
        let mut den = BigInt::one();
        for (x, y) in vecs {
            den = den.lcm(x.denom());
            den = den.lcm(y.denom());
        }
        let denr = BigRational::from_integer(den.clone());
        let ivecs: Vec<(BigInt, BigInt)> = vecs
            .iter()
            .map(|(x, y)| ((x * &denr).to_integer(), (y * &denr).to_integer()))
            .collect();
        // second column: gcd of the y-parts with combination tracking
        let mut c2x = BigInt::zero();
        let mut c2y = BigInt::zero();
        for (x, y) in &ivecs {
            if y.is_zero() {
                continue;
            }
            if c2y.is_zero() {
                c2x = x.clone();
                c2y = y.clone();
            } else {
                let e = c2y.extended_gcd(y);
                c2x = &e.x * &c2x + &e.y * x;
                c2y = e.gcd;
            }
        }
        if c2y.is_zero() {
            return Err(Error::DegenerateLattice);
        }
        if c2y.is_negative() {
            c2x = -c2x;
            c2y = -c2y;
        }
        // zero the y-parts; residual x-parts generate the first column
        let mut a = BigInt::zero();
        for (x, y) in &ivecs {
            let r = y / &c2y;
            let res = x - &r * &c2x;
            a = a.gcd(&res);
        }
        if a.is_zero() {
            return Err(Error::DegenerateLattice);
        }
        let b = c2x.mod_floor(&a);
        // primitive part into the scale
        let content = a.gcd(&b).gcd(&c2y);
        Ok(QoIdeal {
            scale: BigRational::new(content.clone(), den),
            a: &a / &content,
            b: &b / &content,
            g: &c2y / &content,
        })
    }

    /// True when the lattice is closed under multiplication by θ.
    fn theta_closed(&self, l: &QoIdeal) -> bool {
        let theta = QuadElem::new(BigRational::zero(), BigRational::one());
        l.basis()
            .iter()
            .all(|v| l.contains(&v.mul(&theta, &self.0)))
    }

    /// Canonical form of the lattice spanned by the given vectors, verified
    /// to be a fractional ideal of the order.
    pub fn hnf_ideal(&self, vecs: &[(BigRational, BigRational)]) -> Result<QoIdeal> {
        let l = self.canonicalize(vecs)?;
        if !self.theta_closed(&l) {
            return Err(Error::InvalidIdeal(
                "lattice is not a module over the order".into(),
            ));
        }
        Ok(l)
    }

    /// Ideal generated by field elements as a module over the order.
    pub fn module_generated(&self, gens: &[QuadElem]) -> Result<QoIdeal> {
        if gens.iter().all(|e| e.is_zero()) {
            return Err(Error::InvalidIdeal("zero module".into()));
        }
        let theta = QuadElem::new(BigRational::zero(), BigRational::one());
        let mut vecs = Vec::with_capacity(2 * gens.len());
        for e in gens {
            vecs.push((e.x.clone(), e.y.clone()));
            let et = e.mul(&theta, &self.0);
            vecs.push((et.x, et.y));
        }
        let l = self.canonicalize(&vecs)?;
        debug_assert!(self.theta_closed(&l));
        Ok(l)
    }

    fn intersect_lattices(&self, l1: &QoIdeal, l2: &QoIdeal) -> QoIdeal {
        // common integer scaling
        let q = l1.scale.denom().lcm(l2.scale.denom());
        let qr = BigRational::from_integer(q.clone());
        let to_int = |l: &QoIdeal| -> [(BigInt, BigInt); 2] {
            let s = (&l.scale * &qr).to_integer();
            [(&s * &l.a, BigInt::zero()), (&s * &l.b, &s * &l.g)]
        };
        let b1 = to_int(l1);
        let b2 = to_int(l2);
        // kernel of the 2×4 integer matrix [B1 | −B2] by column reduction
        // with a tracked transform
        let mut cols: Vec<[BigInt; 2]> = vec![
            [b1[0].0.clone(), b1[0].1.clone()],
            [b1[1].0.clone(), b1[1].1.clone()],
            [-b2[0].0.clone(), -b2[0].1.clone()],
            [-b2[1].0.clone(), -b2[1].1.clone()],
        ];
        let mut u: Vec<[BigInt; 4]> = (0..4)
            .map(|i| {
                let mut row = [
                    BigInt::zero(),
                    BigInt::zero(),
                    BigInt::zero(),
                    BigInt::zero(),
                ];
                row[i] = BigInt::one();
                row
            })
            .collect();
        let mut pivot = 0usize;
        for row in 0..2 {
            loop {
                let mut nonzero: Vec<usize> =
                    (pivot..4).filter(|&j| !cols[j][row].is_zero()).collect();
                if nonzero.is_empty() {
                    break;
                }
                nonzero.sort_by_key(|&j| cols[j][row].abs());
                let jmin = nonzero[0];
                cols.swap(pivot, jmin);
                u.swap(pivot, jmin);
                if nonzero.len() == 1 {
                    break;
                }
                for j in pivot + 1..4 {
                    if cols[j][row].is_zero() {
                        continue;
                    }
                    let q = cols[j][row].div_floor(&cols[pivot][row]);
                    let piv = cols[pivot].clone();
                    for (c, p) in cols[j].iter_mut().zip(&piv) {
                        *c -= &q * p;
                    }
                    let piv = u[pivot].clone();
                    for (c, p) in u[j].iter_mut().zip(&piv) {
                        *c -= &q * p;
                    }
                }
            }
            pivot += 1;
        }
        // columns pivot..4 are zero; their transforms span the kernel
        debug_assert_eq!(pivot, 2, "two independent rank-2 lattices");
        let mut vecs = Vec::new();
        for uj in u.iter().take(4).skip(2) {
            let x = &uj[0] * &b1[0].0 + &uj[1] * &b1[1].0;
            let y = &uj[0] * &b1[0].1 + &uj[1] * &b1[1].1;
            vecs.push((
                BigRational::new(x, q.clone()),
                BigRational::new(y, q.clone()),
            ));
        }
        self.canonicalize(&vecs)
            .expect("intersection of full-rank ideals has full rank")
    }

    /// Deterministic pseudo-random fractional ideal with numerators and
    /// denominators bounded by `height`.
    pub fn random_ideal(&self, seed: u64, height: i64) -> QoIdeal {
        let mut rng = SplitMix64::new(seed);
        self.sample_ideal(
            &mut rng,
            &SampleBounds {
                height,
                max_gens: 2,
            },
        )
    }

    /// Searches for a generator of `a`: Lagrange-reduces the basis with
    /// respect to a positive definite form (the norm form when N < 0, the
    /// trace-of-squares form when N > 0) and scans small coefficient
    /// combinations for an element of norm ±norm(a) that regenerates `a`.
    /// The coefficient box covers every generator whose unit-balanced
    /// embedding is moderate, which is exact for the small fundamental units
    /// exercised here.
    fn principal_generator(&self, a: &QoIdeal) -> Option<QuadElem> {
        let ord = &self.0;
        let pos_form = |e: &QuadElem| -> BigRational {
            if ord.imaginary() {
                e.norm(ord)
            } else {
                // σ₁² + σ₂² = 2x² + 2txy + (t² + 2n)y²
                let two = BigRational::from_integer(BigInt::from(2));
                let t = BigRational::from_integer(ord.t.clone());
                let n = BigRational::from_integer(ord.n.clone());
                &two * &e.x * &e.x + &two * &t * &e.x * &e.y
                    + (&t * &t + &two * &n) * &e.y * &e.y
            }
        };
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let [mut v1, mut v2] = a.basis();
        // Lagrange reduction; stops as soon as the shorter candidate stops
        // improving, which also avoids oscillation at half-integer quotients
        loop {
            if pos_form(&v2) < pos_form(&v1) {
                std::mem::swap(&mut v1, &mut v2);
            }
            let p1 = pos_form(&v1);
            let b12 = (pos_form(&QuadElem::new(&v1.x + &v2.x, &v1.y + &v2.y))
                - pos_form(&v1)
                - pos_form(&v2))
                * half.clone();
            let mu = (b12 / p1).round().to_integer();
            if mu.is_zero() {
                break;
            }
            let mur = BigRational::from_integer(mu);
            let cand = QuadElem::new(&v2.x - &mur * &v1.x, &v2.y - &mur * &v1.y);
            if pos_form(&cand) >= pos_form(&v2) {
                break;
            }
            v2 = cand;
        }
        let target = a.norm();
        for ca in -8i64..=8 {
            for cb in -8i64..=8 {
                if ca == 0 && cb == 0 {
                    continue;
                }
                let car = BigRational::from_integer(BigInt::from(ca));
                let cbr = BigRational::from_integer(BigInt::from(cb));
                let z = QuadElem::new(&car * &v1.x + &cbr * &v2.x, &car * &v1.y + &cbr * &v2.y);
                if z.norm(ord).abs() != target {
                    continue;
                }
                if let Ok(p) = self.module_generated(std::slice::from_ref(&z)) {
                    if p == *a {
                        return Some(z);
                    }
                }
            }
        }
        None
    }
}

impl IdealSystem for Qo {
    type Ideal = QoIdeal;
    type Elem = QuadElem;

    fn name(&self) -> String {
        self.0.to_string()
    }

    fn unit(&self) -> QoIdeal {
        QoIdeal {
            scale: BigRational::one(),
            a: BigInt::one(),
            b: BigInt::zero(),
            g: BigInt::one(),
        }
    }

    fn sum(&self, a: &QoIdeal, b: &QoIdeal) -> QoIdeal {
        let mut vecs = Vec::with_capacity(4);
        for e in a.basis().into_iter().chain(b.basis()) {
            vecs.push((e.x, e.y));
        }
        self.canonicalize(&vecs).expect("sum of full-rank lattices")
    }

    fn product(&self, a: &QoIdeal, b: &QoIdeal) -> QoIdeal {
        let mut vecs = Vec::with_capacity(4);
        for ea in a.basis().iter() {
            for eb in b.basis().iter() {
                let p = ea.mul(eb, &self.0);
                vecs.push((p.x, p.y));
            }
        }
        self.canonicalize(&vecs)
            .expect("product of full-rank lattices")
    }

    fn intersect(&self, a: &QoIdeal, b: &QoIdeal) -> QoIdeal {
        self.intersect_lattices(a, b)
    }

    fn colon(&self, a: &QoIdeal, b: &QoIdeal) -> QoIdeal {
        // (A : B) = ⋂ over basis elements β of B of β⁻¹·A
        let mut acc: Option<QoIdeal> = None;
        for beta in b.basis().iter() {
            let binv = beta.inv(&self.0);
            let vecs: Vec<(BigRational, BigRational)> = a
                .basis()
                .iter()
                .map(|e| {
                    let p = e.mul(&binv, &self.0);
                    (p.x, p.y)
                })
                .collect();
            let shifted = self.canonicalize(&vecs).expect("scaled lattice keeps rank");
            acc = Some(match acc {
                None => shifted,
                Some(u) => self.intersect_lattices(&u, &shifted),
            });
        }
        acc.expect("ideal has a basis")
    }

    fn is_subideal(&self, a: &QoIdeal, b: &QoIdeal) -> bool {
        a.basis().iter().all(|e| b.contains(e))
    }

    fn principal(&self, e: &QuadElem) -> QoIdeal {
        self.module_generated(std::slice::from_ref(e))
            .expect("nonzero element")
    }

    fn scale(&self, e: &QuadElem, a: &QoIdeal) -> QoIdeal {
        let vecs: Vec<(BigRational, BigRational)> = a
            .basis()
            .iter()
            .map(|v| {
                let p = v.mul(e, &self.0);
                (p.x, p.y)
            })
            .collect();
        self.canonicalize(&vecs).expect("scaling keeps rank")
    }

    fn minimal_generators(&self, a: &QoIdeal) -> Vec<QuadElem> {
        // the two basis vectors; finding a single generator when one exists
        // is a search (`is_principal`) and never needed for regeneration
        a.basis().to_vec()
    }

    fn generated(&self, gens: &[QuadElem]) -> Result<QoIdeal> {
        self.module_generated(gens)
    }

    fn w_closure(&self, a: &QoIdeal) -> QoIdeal {
        // every fractional ideal of a quadratic order is divisorial, so the
        // maximal t-ideals are the maximal ideals and A^w = ⋂ A·D_P = A
        a.clone()
    }

    fn cic_is_self(&self) -> bool {
        self.0.conductor == 1
    }

    fn cic_description(&self) -> String {
        format!("maximal order qo(N={},f=1)", self.0.n_field)
    }

    fn is_principal(&self, a: &QoIdeal) -> bool {
        self.principal_generator(a).is_some()
    }

    fn element_window(&self) -> Vec<QuadElem> {
        // wide enough that the conductor and its companions appear in
        // two-generated and element-quantified conditions
        let m = (self.0.conductor as i64).max(2);
        let mut out = Vec::new();
        for x in -m..=m {
            for y in -m..=m {
                if x == 0 && y == 0 {
                    continue;
                }
                out.push(QuadElem::from_ints(x, y));
            }
        }
        out
    }

    fn sample_ideal(&self, rng: &mut SplitMix64, bounds: &SampleBounds) -> QoIdeal {
        let h = bounds.height.max(1);
        loop {
            let mut gens = Vec::new();
            for _ in 0..2 {
                let num_x = rng.range_i64(-h, h);
                let num_y = rng.range_i64(-h, h);
                let den = rng.range_i64(1, h);
                gens.push(QuadElem::new(
                    BigRational::new(BigInt::from(num_x), BigInt::from(den)),
                    BigRational::new(BigInt::from(num_y), BigInt::from(den)),
                ));
            }
            if gens.iter().all(|e| e.is_zero()) {
                continue;
            }
            if let Ok(l) = self.module_generated(&gens) {
                return l;
            }
        }
    }

    fn seed_ideals(&self) -> Vec<QoIdeal> {
        let mut out = vec![self.unit()];
        if self.0.conductor > 1 {
            // the conductor ideal f·O_max = fℤ + θℤ and the principal pair
            // (f), (θ) whose sum it is — the standard witnesses for every
            // non-maximal phenomenon
            let f = BigInt::from(self.0.conductor);
            out.push(QoIdeal {
                scale: BigRational::one(),
                a: f,
                b: BigInt::zero(),
                g: BigInt::one(),
            });
            out.push(self.principal(&QuadElem::from_ints(self.0.conductor as i64, 0)));
            out.push(self.principal(&QuadElem::from_ints(0, 1)));
        }
        for p in [2i64, 3] {
            let gens = [QuadElem::from_ints(p, 0), QuadElem::from_ints(1, 1)];
            if let Ok(l) = self.module_generated(&gens) {
                out.push(l);
            }
        }
        out
    }

    fn ideal_literal(&self, a: &QoIdeal) -> String {
        let [e1, e2] = a.basis();
        format!("{}, {}", self.elem_literal(&e1), self.elem_literal(&e2))
    }

    fn parse_ideal(&self, s: &str) -> Result<QoIdeal> {
        let gens: Result<Vec<QuadElem>> = s.split(',').map(|tok| self.parse_elem(tok)).collect();
        self.module_generated(&gens?)
    }

    /// Renders `x + yθ` in terms of w = ω, so the shown coordinate is y·f.
    fn elem_literal(&self, e: &QuadElem) -> String {
        let yw = &e.y * BigRational::from_integer(BigInt::from(self.0.conductor));
        let mut out = String::new();
        if !e.x.is_zero() || yw.is_zero() {
            out.push_str(&e.x.to_string());
        }
        if !yw.is_zero() {
            if yw.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = yw.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push('w');
        }
        out
    }

    fn parse_elem(&self, s: &str) -> Result<QuadElem> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let parse_rat = |t: &str| -> Result<BigRational> {
            if let Some((p, q)) = t.split_once('/') {
                let pn: BigInt = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {t:?}")))?;
                let qn: BigInt = q
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {t:?}")))?;
                if qn.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {t:?}")));
                }
                Ok(BigRational::new(pn, qn))
            } else {
                let pn: BigInt = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?}")))?;
                Ok(BigRational::from_integer(pn))
            }
        };
        let mut x = BigRational::zero();
        let mut yw = BigRational::zero();
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, c) in compact.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 {
                terms.push(cur.clone());
                cur.clear();
            }
            if c == '+' && cur.is_empty() && i > 0 {
                continue;
            }
            cur.push(c);
        }
        terms.push(cur);
        for term in terms {
            if term.is_empty() {
                continue;
            }
            if let Some(coef) = term.strip_suffix('w') {
                let c = match coef {
                    "" => BigRational::one(),
                    "-" => -BigRational::one(),
                    other => parse_rat(other)?,
                };
                yw += c;
            } else {
                x += parse_rat(&term)?;
            }
        }
        // w denotes ω; internally the basis is θ = f·ω
        let y = yw / BigRational::from_integer(BigInt::from(self.0.conductor));
        Ok(QuadElem::new(x, y))
    }
}
