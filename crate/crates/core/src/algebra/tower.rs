//! Extension towers F_q ⊂ F_{q^{k_1}} ⊂ F_{q^{k_1 k_2}} ⊂ …
//!
//! Floors are built on demand and cached; each step modulus is the canonical
//! irreducible over the floor below, so embeddings are coefficient injections
//! and commute by construction.

use std::sync::Mutex;

use super::field::{FiniteField, FqElement};
use super::Result;

pub struct ExtensionTower {
    base: FiniteField,
    /// floors[i] is the floor of relative degree `degrees[i]` over the base;
    /// only extension degrees that divide each other chain directly.
    floors: Mutex<Vec<(usize, FiniteField)>>,
}

impl ExtensionTower {
    pub fn new(base: FiniteField) -> Self {
        ExtensionTower {
            base,
            floors: Mutex::new(Vec::new()),
        }
    }

    pub fn base(&self) -> &FiniteField {
        &self.base
    }

    /// The floor F_{q^k}. Floors are chained: F_{q^k} is reached from the
    /// largest already-built floor whose degree divides k.
    pub fn floor(&self, k: usize) -> Result<FiniteField> {
        assert!(k >= 1);
        if k == 1 {
            return Ok(self.base.clone());
        }
        let mut floors = self.floors.lock().unwrap();
        if let Some((_, f)) = floors.iter().find(|(d, _)| *d == k) {
            return Ok(f.clone());
        }
        // best existing stepping stone
        let mut from_deg = 1;
        let mut from = self.base.clone();
        for (d, f) in floors.iter() {
            if k % d == 0 && *d > from_deg {
                from_deg = *d;
                from = f.clone();
            }
        }
        let field = from.extend(k / from_deg)?;
        floors.push((k, field.clone()));
        Ok(field)
    }

    /// Step moduli from the base up to floor k (each over the floor below).
    pub fn steps(&self, k: usize) -> Result<Vec<Vec<FqElement>>> {
        let top = self.floor(k)?;
        let mut chain = Vec::new();
        let mut cur = Some(top);
        while let Some(f) = cur {
            if &f == &self.base {
                break;
            }
            chain.push(f.modulus());
            cur = f.base_field().cloned();
        }
        chain.reverse();
        Ok(chain)
    }

    /// Embed an element from one floor into a higher one (degrees must divide).
    pub fn embed(&self, from_k: usize, to_k: usize, a: &FqElement) -> Result<FqElement> {
        assert!(to_k % from_k == 0);
        let from = self.floor(from_k)?;
        let to = self.floor(to_k)?;
        Ok(to.embed(&from, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_chain_and_commute() {
        let f9 = FiniteField::galois(3, 2).unwrap();
        let tower = ExtensionTower::new(f9.clone());
        let f2 = tower.floor(2).unwrap();
        let f4 = tower.floor(4).unwrap();
        assert_eq!(f2.degree(), 4);
        assert_eq!(f4.degree(), 8);
        // embedding through floor 2 equals direct embedding
        for i in 0..9u128 {
            let a = f9.element_from_index(i);
            let via = tower.embed(2, 4, &tower.embed(1, 2, &a).unwrap()).unwrap();
            let direct = tower.embed(1, 4, &a).unwrap();
            assert_eq!(via, direct);
        }
        // identity path maps down to the identity
        let a = f9.element_from_index(7);
        let up = tower.embed(1, 4, &a).unwrap();
        assert_eq!(f4.project(&f9, &up), Some(a));
    }

    #[test]
    fn step_moduli_are_irreducible() {
        let f5 = FiniteField::galois(5, 1).unwrap();
        let tower = ExtensionTower::new(f5);
        let steps = tower.steps(6).unwrap();
        assert!(!steps.is_empty());
    }
}
