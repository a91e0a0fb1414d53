use std::collections::BTreeSet;

use num_traits::One;

use super::{Exp, MonomialOrder, MultiPoly, PolyError, Rat};

/// Reduced Gröbner basis of a polynomial ideal under a fixed monomial order.
///
/// Elements are monic, pairwise reduced and sorted by decreasing leading
/// monomial, so a fixed `(order, ideal)` has exactly one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<MultiPoly>,
    vars: Vec<String>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Ideal membership: `f` lies in the ideal iff its normal form vanishes.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool, PolyError> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

fn exp_lcm(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn exp_divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_coprime(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Remainder of full multivariate division of `f` by `basis`.
fn reduce(f: &MultiPoly, basis: &[MultiPoly], order: &MonomialOrder) -> MultiPoly {
    let vars = f.vars();
    let leads: Vec<(Exp, Rat)> = basis
        .iter()
        .map(|g| g.leading(order).expect("basis elements are nonzero"))
        .collect();
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(vars);
    while let Some((lm, lc)) = p.leading(order) {
        let mut reduced = false;
        for (g, (glm, glc)) in basis.iter().zip(&leads) {
            if exp_divides(glm, &lm) {
                let q = exp_sub(&lm, glm);
                let c = &lc / glc;
                p = p.sub(&g.mul_monomial(&q, &c));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = MultiPoly::from_terms(vars, [(lm.clone(), lc.clone())]);
            rem = rem.add(&t);
            p = p.sub(&t);
        }
    }
    rem
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (fl, fc) = f.leading(order).unwrap();
    let (gl, gc) = g.leading(order).unwrap();
    let l = exp_lcm(&fl, &gl);
    let a = f.mul_monomial(&exp_sub(&l, &fl), &(Rat::one() / fc));
    let b = g.mul_monomial(&exp_sub(&l, &gl), &(Rat::one() / gc));
    a.sub(&b)
}

/// Buchberger's algorithm with the coprime-leading-term and chain criteria,
/// normal selection by sugar degree, followed by full inter-reduction.
pub fn groebner(gens: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    let vars = match gens.first() {
        Some(g) => g.vars().to_vec(),
        None => {
            return Err(PolyError::BadEncoding("empty generator list".into()));
        }
    };
    for g in gens {
        if g.vars() != vars {
            return Err(PolyError::VariableMismatch);
        }
    }

    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(&order));
        }
    }
    basis.sort();
    basis.dedup();

    // pending pairs keyed by (sugar, lcm) for deterministic normal selection
    let mut pending: BTreeSet<(u64, Exp, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let sugar = |f: &MultiPoly| f.total_degree().unwrap_or(0) as u64;
    let add_pairs = |pending: &mut BTreeSet<(u64, Exp, usize, usize)>,
                         basis: &[MultiPoly],
                         j: usize| {
        for i in 0..j {
            let (li, _) = basis[i].leading(&order).unwrap();
            let (lj, _) = basis[j].leading(&order).unwrap();
            let l = exp_lcm(&li, &lj);
            let deg: u64 = l.iter().map(|&x| x as u64).sum();
            pending.insert((deg.max(sugar(&basis[i])).max(sugar(&basis[j])), l, i, j));
        }
    };
    for j in 0..basis.len() {
        add_pairs(&mut pending, &basis, j);
    }

    while let Some(entry) = pending.iter().next().cloned() {
        pending.remove(&entry);
        let (_, lcm, i, j) = entry;
        done.insert((i, j));
        let (li, _) = basis[i].leading(&order).unwrap();
        let (lj, _) = basis[j].leading(&order).unwrap();
        if exp_coprime(&li, &lj) {
            continue;
        }
        // chain criterion: some k with lt(k) | lcm(i,j) and both pairs with k
        // already treated
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (lk, _) = g.leading(&order).unwrap();
            if exp_divides(&lk, &lcm)
                && done.contains(&(k.min(i), k.max(i)))
                && done.contains(&(k.min(j), k.max(j)))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], &order);
        let r = reduce(&s, &basis, &order);
        if !r.is_zero() {
            basis.push(r.monic(&order));
            add_pairs(&mut pending, &basis, basis.len() - 1);
        }
    }

    // inter-reduce: drop elements whose lead is divisible by another lead,
    // then tail-reduce each survivor against the others
    let mut keep: Vec<MultiPoly> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let (lf, _) = f.leading(&order).unwrap();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let (lg, _) = g.leading(&order).unwrap();
            exp_divides(&lg, &lf) && (lg != lf || j < i)
        });
        if !redundant {
            keep.push(f.clone());
        }
    }
    let mut reduced: Vec<MultiPoly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> = keep
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = if others.is_empty() {
            keep[i].clone()
        } else {
            reduce(&keep[i], &others, &order)
        };
        if !r.is_zero() {
            reduced.push(r.monic(&order));
        }
    }
    reduced.sort_by(|a, b| {
        let (la, _) = a.leading(&order).unwrap();
        let (lb, _) = b.leading(&order).unwrap();
        order.cmp_exp(&lb, &la)
    });

    Ok(GroebnerBasis { order, elements: reduced, vars })
}

/// Remainder of multivariate division of `f` by the basis. Idempotent, and
/// `f - normal_form(f)` lies in the ideal.
pub fn normal_form(f: &MultiPoly, gb: &GroebnerBasis) -> Result<MultiPoly, PolyError> {
    if f.vars() != gb.vars {
        return Err(PolyError::VariableMismatch);
    }
    if gb.elements.is_empty() {
        return Ok(f.clone());
    }
    Ok(reduce(f, &gb.elements, &gb.order))
}

/// Decides membership of `f` in the unital subalgebra generated by `gens`,
/// by tag-variable elimination: compute a Gröbner basis of the ideal
/// `<g_i - T_i>` under a block order with the original variables greater
/// than the tags, and check that the normal form of `f` involves tags only.
pub fn subalgebra_contains(f: &MultiPoly, gens: &[MultiPoly]) -> Result<bool, PolyError> {
    let vars = f.vars().to_vec();
    for g in gens {
        if g.vars() != vars {
            return Err(PolyError::VariableMismatch);
        }
    }
    if f.is_constant() {
        return Ok(true);
    }
    let mut ext = vars.clone();
    for i in 1..=gens.len() {
        let tag = format!("t#{}", i);
        if vars.contains(&tag) {
            return Err(PolyError::VariableClash(tag));
        }
        ext.push(tag);
    }
    let order = MonomialOrder::Elimination { split: vars.len() };
    let ideal: Vec<MultiPoly> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.extend_vars(&ext)
                .sub(&MultiPoly::var(&ext, vars.len() + i))
        })
        .collect();
    let nonzero: Vec<MultiPoly> = ideal.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        // all generators are zero; only constants are in the subalgebra
        return Ok(f.is_constant());
    }
    let gb = groebner(&nonzero, order)?;
    let nf = normal_form(&f.extend_vars(&ext), &gb)?;
    Ok(nf.support_vars().iter().all(|&i| i >= vars.len()))
}
