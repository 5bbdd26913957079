//! Reshetikhin–Turaev evaluation of braid closures on the vector
//! representation of `gl_n`.
//!
//! `Ř(e_i⊗e_i) = e_i⊗e_i`, and for `i < j`
//! `Ř(e_i⊗e_j) = q e_j⊗e_i`, `Ř(e_j⊗e_i) = q e_i⊗e_j + (1−q²) e_j⊗e_i`.
//! This satisfies `(Ř−1)(Ř+q²) = 0`, and the closure is a quantum trace
//! with weight `q^{1−n+2i}` on `e_i`.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::exactalg::{LaurentPoly, RatFun};

type State = HashMap<Vec<u8>, LaurentPoly>;

fn add_to(state: &mut State, key: Vec<u8>, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let e = state.entry(key).or_default();
    *e = &*e + &c;
}

fn apply_letter(state: &State, letter: i32) -> State {
    let p = letter.unsigned_abs() as usize - 1;
    let q1 = LaurentPoly::q_pow(1);
    let omq2 = LaurentPoly::from_terms([(0, 1), (2, -1)]);
    let qm2 = LaurentPoly::q_pow(-2);
    let one_minus_qm2 = LaurentPoly::from_terms([(0, 1), (-2, -1)]);
    let mut out = State::with_capacity(state.len() * 2);
    for (v, c) in state {
        let (x, y) = (v[p], v[p + 1]);
        let mut swapped = v.clone();
        swapped.swap(p, p + 1);
        // Ř applied to this basis vector, as (vector, coefficient) pairs
        let image: Vec<(Vec<u8>, LaurentPoly)> = if x == y {
            vec![(v.clone(), LaurentPoly::one())]
        } else if x < y {
            vec![(swapped, q1.clone())]
        } else {
            vec![(swapped, q1.clone()), (v.clone(), omq2.clone())]
        };
        if letter > 0 {
            for (k, m) in image {
                add_to(&mut out, k, c * &m);
            }
        } else {
            // Ř⁻¹ = q⁻²Ř + (1 − q⁻²)
            for (k, m) in image {
                add_to(&mut out, k, &(c * &m) * &qm2);
            }
            add_to(&mut out, v.clone(), c * &one_minus_qm2);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The framed `gl_n` invariant of the closure of `w`.
pub fn rt_invariant(w: &BraidWord, n: usize) -> RatFun {
    assert!(n >= 1, "rank must be positive");
    let m = w.strands();
    let weight = |v: &[u8]| -> i64 { v.iter().map(|&i| 1 - n as i64 + 2 * i as i64).sum() };
    let mut total = LaurentPoly::zero();
    let mut basis = vec![0u8; m];
    loop {
        let mut state = State::new();
        state.insert(basis.clone(), LaurentPoly::one());
        for &l in w.letters() {
            state = apply_letter(&state, l);
        }
        if let Some(c) = state.get(&basis) {
            total = &total + &c.shift_by(weight(&basis));
        }
        // next basis vector in base n
        let mut k = 0;
        while k < m {
            basis[k] += 1;
            if (basis[k] as usize) < n {
                break;
            }
            basis[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
    }
    RatFun::from_poly(total)
}
