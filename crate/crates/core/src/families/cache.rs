use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::operators::euler_poly;
use crate::{QPoly, Rational};

use super::{a1_poly, a1_sum_poly, a2_poly, p_explicit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    P,
    Q,
    A1,
    A2,
    /// The unsquared `a₁(m,x)`.
    SmallA1,
    /// Euler polynomials `e_n`.
    Euler,
}

/// Memo of family members keyed by `(family, index)`.
///
/// Entries are pure functions of the key, so two threads racing to fill the
/// same slot store equal values.
#[derive(Debug, Default)]
pub struct FamilyCache {
    entries: RwLock<HashMap<(Family, u32), Arc<QPoly>>>,
}

impl FamilyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, family: Family, index: u32) -> Arc<QPoly> {
        if let Some(p) = self.entries.read().unwrap().get(&(family, index)) {
            return Arc::clone(p);
        }
        let built = Arc::new(self.build(family, index));
        let mut entries = self.entries.write().unwrap();
        Arc::clone(entries.entry((family, index)).or_insert(built))
    }

    fn build(&self, family: Family, index: u32) -> QPoly {
        match family {
            Family::P => p_explicit(index),
            Family::Q => {
                assert!(index >= 1, "Q(m, x) needs m >= 1");
                let s = &*self.p(index) + &*self.p(index - 1);
                s.shift(&crate::scalar::int(-1)) + s
            }
            Family::A1 => a1_poly(index),
            Family::A2 => a2_poly(index),
            Family::SmallA1 => a1_sum_poly(index),
            Family::Euler => euler_poly(index as usize),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn p(&self, m: u32) -> Arc<QPoly> {
        self.get(Family::P, m)
    }

    pub fn q(&self, m: u32) -> Arc<QPoly> {
        self.get(Family::Q, m)
    }

    pub fn a1(&self, m: u32) -> Arc<QPoly> {
        self.get(Family::A1, m)
    }

    pub fn a2(&self, n: u32) -> Arc<QPoly> {
        self.get(Family::A2, n)
    }

    pub fn small_a1(&self, m: u32) -> Arc<QPoly> {
        self.get(Family::SmallA1, m)
    }

    pub fn p_at(&self, m: u32, x: &Rational) -> Rational {
        self.p(m).eval(x)
    }

    pub fn q_at(&self, m: u32, x: &Rational) -> Rational {
        self.q(m).eval(x)
    }
}
