//! Seeded generation of bounded-denominator rationals, points and polytopes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numeric::{QVector, Rational};
use crate::polytope::{canonicalize, Polytope};

pub const DEFAULT_DENOMINATOR_BOUND: u64 = 64;

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

/// FNV-1a, used to give every law its own stream under one suite seed.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

impl Sampler {
    pub fn new(seed: u64, denominator_bound: u64) -> Self {
        assert!(denominator_bound >= 2, "denominator bound must be at least 2");
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: i64::try_from(denominator_bound).expect("bound fits in i64"),
        }
    }

    /// Independent stream for case `case` of law `law`; the result depends
    /// only on its arguments, so cases may run in any order.
    pub fn for_case(seed: u64, law: &str, case: usize, denominator_bound: u64) -> Self {
        let mut s = Sampler::new(seed ^ name_hash(law), denominator_bound);
        s.rng.set_stream(case as u64);
        s
    }

    pub fn denominator_bound(&self) -> i64 {
        self.bound
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    fn denominator(&mut self) -> i64 {
        self.rng.gen_range(1..=self.bound)
    }

    /// Uniform-ish rational in the open interval (0, 1).
    pub fn unit_open(&mut self) -> Rational {
        let den = self.rng.gen_range(2..=self.bound);
        let num = self.rng.gen_range(1..den);
        Rational::new(num, den).expect("positive denominator")
    }

    /// Rational with |x| <= magnitude.
    pub fn rational(&mut self, magnitude: i64) -> Rational {
        let den = self.denominator();
        let num = self.rng.gen_range(-magnitude * den..=magnitude * den);
        Rational::new(num, den).expect("positive denominator")
    }

    /// Rational in [0, magnitude].
    pub fn nonneg(&mut self, magnitude: i64) -> Rational {
        self.rational(magnitude).abs()
    }

    /// Rational in (1, magnitude].
    pub fn above_one(&mut self, magnitude: i64) -> Rational {
        loop {
            let den = self.denominator();
            let num = self.rng.gen_range(den + 1..=magnitude * den);
            if let Ok(r) = Rational::new(num, den) {
                return r;
            }
        }
    }

    pub fn vector(&mut self, dim: usize, magnitude: i64) -> QVector {
        QVector::new((0..dim).map(|_| self.rational(magnitude)).collect()).expect("dim > 0")
    }

    pub fn nonneg_vector(&mut self, dim: usize, magnitude: i64) -> QVector {
        QVector::new((0..dim).map(|_| self.nonneg(magnitude)).collect()).expect("dim > 0")
    }

    /// Random nonzero vector with entries in [-magnitude, magnitude].
    pub fn direction(&mut self, dim: usize, magnitude: i64) -> QVector {
        loop {
            let v = self.vector(dim, magnitude);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Random convex combination of the vertices of `p`; a vertex itself one
    /// time in four.
    pub fn point_in(&mut self, p: &Polytope) -> QVector {
        let vs = p.vertices();
        if vs.len() == 1 || self.chance(1, 4) {
            return vs[self.index(vs.len())].clone();
        }
        let weights: Vec<i64> = (0..vs.len()).map(|_| self.rng.gen_range(0..=self.bound)).collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            return vs[0].clone();
        }
        let mut acc = QVector::zeros(p.dim());
        for (w, v) in weights.iter().zip(vs) {
            if *w != 0 {
                let k = Rational::new(*w, total).expect("positive total");
                acc = acc.add(&v.scale(&k)).expect("same dimension");
            }
        }
        acc
    }

    /// Canonical hull of 1..=max_generators random points in
    /// [-magnitude, magnitude]^dim.
    pub fn polytope(&mut self, dim: usize, max_generators: usize, magnitude: i64) -> Polytope {
        let k = self.rng.gen_range(1..=max_generators);
        let pts: Vec<QVector> = (0..k).map(|_| self.vector(dim, magnitude)).collect();
        canonicalize(&pts).expect("well-formed generators")
    }
}
