//! Finite groups as explicit multiplication tables, their group algebras,
//! characters, subgroups, and bicharacters.
//!
//! Everything here is exhaustive and exact: characters are enumerated by
//! backtracking over fourth roots of unity, subgroups by closure-testing
//! subsets, and recognition works from the multiset of element orders.

use thiserror::Error;

use crate::exact_math::{GaussianRational, Matrix, Tensor3, Vector};
use crate::hopf_core::HopfAlgebra;

/// Errors from group-level constructions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("bicharacter table is not symmetric at pair ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("bicharacter table fails multiplicativity at ({g}, {h}, {k})")]
    NotBimultiplicative { g: usize, h: usize, k: usize },
    #[error("table has wrong shape: {0}")]
    Shape(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub order: usize,
    /// `cayley[i][j]` = index of `g_i·g_j`.
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub labels: Vec<String>,
}

/// Presentation-free constructors for the groups used in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// The one-element group.
    Trivial,
    /// Direct product of cyclic groups of the given orders; the element
    /// `(a_1, …, a_r)` gets index `a_1 + n_1·(a_2 + n_2·(…))`, so the
    /// generator of the first factor is index 1.
    Abelian(Vec<usize>),
    /// Dihedral group of order `2n`: rotations `r^a` first, then the
    /// reflections `s·r^a`.
    Dihedral(usize),
    /// The eight quaternion units `±1, ±i, ±j, ±k`.
    Quaternion8,
}

fn validate(group: &FiniteGroup) {
    let n = group.order;
    assert!(n > 0, "empty group");
    assert_eq!(group.cayley.len(), n);
    for row in &group.cayley {
        assert_eq!(row.len(), n);
        assert!(row.iter().all(|&x| x < n));
    }
    for i in 0..n {
        assert_eq!(group.cayley[group.identity][i], i, "left identity");
        assert_eq!(group.cayley[i][group.identity], i, "right identity");
        assert_eq!(group.cayley[i][group.inverse[i]], group.identity, "inverse");
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assert_eq!(
                    group.cayley[group.cayley[a][b]][c],
                    group.cayley[a][group.cayley[b][c]],
                    "associativity at ({a}, {b}, {c})"
                );
            }
        }
    }
}

/// Builds the multiplication table for a [`GroupSpec`] and validates the
/// group axioms exhaustively.
pub fn build_group(spec: &GroupSpec) -> FiniteGroup {
    let group = match spec {
        GroupSpec::Trivial => FiniteGroup {
            order: 1,
            cayley: vec![vec![0]],
            identity: 0,
            inverse: vec![0],
            labels: vec!["e".into()],
        },
        GroupSpec::Abelian(factors) => {
            assert!(!factors.is_empty() && factors.iter().all(|&f| f > 0));
            let order: usize = factors.iter().product();
            let decode = |mut idx: usize| -> Vec<usize> {
                factors
                    .iter()
                    .map(|&f| {
                        let a = idx % f;
                        idx /= f;
                        a
                    })
                    .collect()
            };
            let encode = |tuple: &[usize]| -> usize {
                factors
                    .iter()
                    .zip(tuple)
                    .rev()
                    .fold(0, |acc, (&f, &a)| acc * f + a)
            };
            let mut cayley = vec![vec![0; order]; order];
            let mut inverse = vec![0; order];
            for i in 0..order {
                let ti = decode(i);
                for j in 0..order {
                    let tj = decode(j);
                    let sum: Vec<usize> = factors
                        .iter()
                        .zip(ti.iter().zip(&tj))
                        .map(|(&f, (&a, &b))| (a + b) % f)
                        .collect();
                    cayley[i][j] = encode(&sum);
                }
                let neg: Vec<usize> = factors
                    .iter()
                    .zip(&ti)
                    .map(|(&f, &a)| (f - a) % f)
                    .collect();
                inverse[i] = encode(&neg);
            }
            FiniteGroup {
                order,
                cayley,
                identity: 0,
                inverse,
                labels: (0..order).map(|i| format!("g{}", i + 1)).collect(),
            }
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            assert!(n >= 1);
            let order = 2 * n;
            // Index a + n·ε for s^ε·r^a; s·r^a·s = r^{-a}.
            let idx = |eps: usize, a: usize| a % n + n * (eps % 2);
            let mut cayley = vec![vec![0; order]; order];
            let mut inverse = vec![0; order];
            let mut labels = vec![String::new(); order];
            for e1 in 0..2 {
                for a1 in 0..n {
                    for e2 in 0..2 {
                        for a2 in 0..n {
                            // (s^{e1} r^{a1})(s^{e2} r^{a2}) = s^{e1+e2} r^{a2 ± a1}.
                            let a = if e2 == 0 { a1 + a2 } else { n + a2 - a1 };
                            cayley[idx(e1, a1)][idx(e2, a2)] = idx(e1 + e2, a % n);
                        }
                    }
                }
            }
            for e in 0..2 {
                for a in 0..n {
                    inverse[idx(e, a)] = if e == 0 { idx(0, (n - a) % n) } else { idx(1, a) };
                    labels[idx(e, a)] = match (e, a) {
                        (0, 0) => "1".into(),
                        (0, 1) => "r".into(),
                        (0, a) => format!("r{a}"),
                        (_, 0) => "s".into(),
                        (_, 1) => "sr".into(),
                        (_, a) => format!("sr{a}"),
                    };
                }
            }
            FiniteGroup {
                order,
                cayley,
                identity: 0,
                inverse,
                labels,
            }
        }
        GroupSpec::Quaternion8 => {
            // (sign, axis) with axes 1, i, j, k; index = axis·2 + [sign < 0].
            let idx = |sign: i32, axis: usize| axis * 2 + usize::from(sign < 0);
            let mul = |s1: i32, u1: usize, s2: i32, u2: usize| -> (i32, usize) {
                let s = s1 * s2;
                match (u1, u2) {
                    (0, u) => (s, u),
                    (u, 0) => (s, u),
                    (a, b) if a == b => (-s, 0),
                    // i·j = k and cyclic; reversed order flips the sign.
                    (1, 2) => (s, 3),
                    (2, 3) => (s, 1),
                    (3, 1) => (s, 2),
                    (2, 1) => (-s, 3),
                    (3, 2) => (-s, 1),
                    (1, 3) => (-s, 2),
                    _ => unreachable!(),
                }
            };
            let mut cayley = vec![vec![0; 8]; 8];
            let mut inverse = vec![0; 8];
            for u1 in 0..4 {
                for s1 in [1, -1] {
                    for u2 in 0..4 {
                        for s2 in [1, -1] {
                            let (s, u) = mul(s1, u1, s2, u2);
                            cayley[idx(s1, u1)][idx(s2, u2)] = idx(s, u);
                        }
                    }
                    // (±i)⁻¹ = ∓i etc.; ±1 are self-inverse.
                    inverse[idx(s1, u1)] = if u1 == 0 { idx(s1, 0) } else { idx(-s1, u1) };
                }
            }
            let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
                .map(String::from)
                .to_vec();
            FiniteGroup {
                order: 8,
                cayley,
                identity: 0,
                inverse,
                labels,
            }
        }
    };
    validate(&group);
    group
}

impl FiniteGroup {
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn order_of(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Multiset of element orders, sorted ascending.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order).map(|i| self.order_of(i)).collect();
        orders.sort_unstable();
        orders
    }

    /// Smallest subgroup containing the given elements, sorted by index.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut stack: Vec<usize> = vec![self.identity];
        for &g in gens {
            if !member[g] {
                member[g] = true;
                stack.push(g);
            }
        }
        while let Some(x) = stack.pop() {
            for y in 0..self.order {
                if member[y] {
                    for p in [self.mul(x, y), self.mul(y, x)] {
                        if !member[p] {
                            member[p] = true;
                            stack.push(p);
                        }
                    }
                }
            }
        }
        (0..self.order).filter(|&i| member[i]).collect()
    }
}

/// All subgroups of the given order, as sorted element-index lists.
///
/// Exhaustive: every subset of size `k` containing the identity is tested
/// for closure, so the result is complete by construction.
pub fn subgroups_of_order(group: &FiniteGroup, k: usize) -> Vec<Vec<usize>> {
    assert!(k >= 1 && k <= group.order);
    if group.order % k != 0 {
        return Vec::new();
    }
    let others: Vec<usize> = (0..group.order).filter(|&i| i != group.identity).collect();
    let mut found = Vec::new();
    let mut pick: Vec<usize> = Vec::with_capacity(k - 1);
    fn rec(
        group: &FiniteGroup,
        others: &[usize],
        start: usize,
        remaining: usize,
        pick: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            let mut subset = vec![group.identity];
            subset.extend_from_slice(pick);
            subset.sort_unstable();
            let closed = subset
                .iter()
                .all(|&a| subset.iter().all(|&b| subset.binary_search(&group.mul(a, b)).is_ok()));
            if closed {
                found.push(subset);
            }
            return;
        }
        for pos in start..others.len() {
            pick.push(others[pos]);
            rec(group, others, pos + 1, remaining - 1, pick, found);
            pick.pop();
        }
    }
    rec(group, &others, 0, k - 1, &mut pick, &mut found);
    found
}

/// All homomorphisms `G → μ₄` (fourth roots of unity), found by
/// backtracking over value assignments.  For abelian `G` of exponent
/// dividing 4 this is the full character group.
///
/// Panics if some element's order does not divide 4, since characters of
/// such groups do not take values in `ℚ(i)`.
pub fn character_group(group: &FiniteGroup) -> Vec<Vector> {
    for i in 0..group.order {
        let o = group.order_of(i);
        assert!(
            4 % o == 0,
            "element {i} has order {o}, not a divisor of 4; its character values lie outside ℚ(i)"
        );
    }
    let roots = [
        GaussianRational::one(),
        GaussianRational::i(),
        -&GaussianRational::one(),
        -&GaussianRational::i(),
    ];
    let mut values: Vec<GaussianRational> = vec![GaussianRational::zero(); group.order];
    let mut out = Vec::new();
    fn rec(
        group: &FiniteGroup,
        roots: &[GaussianRational; 4],
        values: &mut Vec<GaussianRational>,
        idx: usize,
        out: &mut Vec<Vector>,
    ) {
        if idx == group.order {
            out.push(Vector(values.clone()));
            return;
        }
        let candidates: &[GaussianRational] = if idx == group.identity {
            std::slice::from_ref(&roots[0])
        } else {
            &roots[..]
        };
        'cand: for c in candidates {
            values[idx] = c.clone();
            for a in 0..=idx {
                for b in 0..=idx {
                    let p = group.mul(a, b);
                    if p <= idx && &values[a] * &values[b] != values[p] {
                        continue 'cand;
                    }
                }
            }
            rec(group, roots, values, idx + 1, out);
        }
        values[idx] = GaussianRational::zero();
    }
    rec(group, &roots, &mut values, 0, &mut out);
    out
}

/// Names a group by order, commutativity, and the multiset of element
/// orders — enough to separate every group of order at most 8.
pub fn recognize_group(group: &FiniteGroup) -> String {
    let orders = group.element_orders();
    let abelian = group.is_abelian();
    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();
    match (group.order, abelian) {
        (1, _) => "1".into(),
        (2, _) => "Z2".into(),
        (4, _) => {
            if count(4) > 0 {
                "Z4".into()
            } else {
                "Z2xZ2".into()
            }
        }
        (8, true) => {
            if count(8) > 0 {
                "Z8".into()
            } else if count(4) > 0 {
                "Z4xZ2".into()
            } else {
                "Z2xZ2xZ2".into()
            }
        }
        (8, false) => {
            if count(4) == 6 {
                "Q8".into()
            } else {
                "D8".into()
            }
        }
        (n, _) => format!("unrecognized(order={n})"),
    }
}

/// Group algebra `K[G]`: basis indexed by group elements, product from the
/// multiplication table, every basis element group-like.
pub fn group_algebra(group: &FiniteGroup) -> HopfAlgebra {
    let n = group.order;
    let one = GaussianRational::one;
    let mut mult = Tensor3::zeros(n, n, n);
    let mut comult = Tensor3::zeros(n, n, n);
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, group.mul(i, j), one());
        }
        comult.set(i, i, i, one());
        antipode[(group.inv(i), i)] = one();
    }
    HopfAlgebra::new(
        group.labels.clone(),
        mult,
        Vector::unit(n, group.identity),
        comult,
        Vector::from_fn(n, |_| one()),
        Some(antipode),
    )
}

/// The function algebra `K^G`, i.e. the dual of [`group_algebra`].
pub fn dual_group_algebra(group: &FiniteGroup) -> HopfAlgebra {
    let mut dual = crate::hopf_core::dual_hopf(&group_algebra(group));
    dual.basis_labels = group.labels.iter().map(|l| format!("δ{l}")).collect();
    dual
}

/// A symmetric bicharacter `θ : G × G → K^×`, stored as its full value
/// table `values[(i, j)] = θ(g_i, g_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    pub values: Matrix,
    /// Whether `g ↦ θ(g, ·)` has trivial kernel.
    pub nondegenerate: bool,
}

impl Bicharacter {
    /// Validates a full value table: multiplicativity in each variable and
    /// symmetry.  The radical is computed to set the nondegeneracy flag.
    pub fn from_table(group: &FiniteGroup, values: Matrix) -> Result<Bicharacter, GroupError> {
        let n = group.order;
        if values.rows() != n || values.cols() != n {
            return Err(GroupError::Shape(format!(
                "{}×{} table for a group of order {n}",
                values.rows(),
                values.cols()
            )));
        }
        for g in 0..n {
            for h in 0..n {
                if values[(g, h)] != values[(h, g)] {
                    return Err(GroupError::NotSymmetric(g, h));
                }
                for k in 0..n {
                    let gh = group.mul(g, h);
                    if &values[(gh, k)] != &(&values[(g, k)] * &values[(h, k)]) {
                        return Err(GroupError::NotBimultiplicative { g, h, k });
                    }
                }
            }
        }
        let nondegenerate = (0..n).all(|g| {
            g == group.identity || (0..n).any(|h| !values[(g, h)].is_one())
        });
        Ok(Bicharacter {
            values,
            nondegenerate,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_core::solve_antipode;

    #[test]
    fn klein_four_group_layout() {
        let g = build_group(&GroupSpec::Abelian(vec![2, 2]));
        assert_eq!(g.order, 4);
        // Index 1 and 2 generate; index 3 is their product.
        assert_eq!(g.mul(1, 2), 3);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.mul(2, 2), 0);
        assert!(g.is_abelian());
        assert_eq!(recognize_group(&g), "Z2xZ2");
        assert_eq!(recognize_group(&build_group(&GroupSpec::Abelian(vec![4]))), "Z4");
        assert_eq!(
            recognize_group(&build_group(&GroupSpec::Abelian(vec![2, 2, 2]))),
            "Z2xZ2xZ2"
        );
        assert_eq!(
            recognize_group(&build_group(&GroupSpec::Abelian(vec![4, 2]))),
            "Z4xZ2"
        );
    }

    #[test]
    fn dihedral_and_quaternion_are_separated() {
        let d8 = build_group(&GroupSpec::Dihedral(4));
        let q8 = build_group(&GroupSpec::Quaternion8);
        assert!(!d8.is_abelian());
        assert!(!q8.is_abelian());
        assert_eq!(d8.element_orders(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(q8.element_orders(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(recognize_group(&d8), "D8");
        assert_eq!(recognize_group(&q8), "Q8");
    }

    #[test]
    fn dihedral_subgroup_counts() {
        // D₈ has 5 subgroups of order 2, 3 of order 4, 1 of order 8.
        let d8 = build_group(&GroupSpec::Dihedral(4));
        assert_eq!(subgroups_of_order(&d8, 1).len(), 1);
        assert_eq!(subgroups_of_order(&d8, 2).len(), 5);
        assert_eq!(subgroups_of_order(&d8, 4).len(), 3);
        assert_eq!(subgroups_of_order(&d8, 8).len(), 1);
        // ℤ₂³ has 7 of order 2 and 7 of order 4.
        let e8 = build_group(&GroupSpec::Abelian(vec![2, 2, 2]));
        assert_eq!(subgroups_of_order(&e8, 2).len(), 7);
        assert_eq!(subgroups_of_order(&e8, 4).len(), 7);
    }

    #[test]
    fn characters_of_small_groups() {
        let v4 = build_group(&GroupSpec::Abelian(vec![2, 2]));
        let chars = character_group(&v4);
        assert_eq!(chars.len(), 4);
        for c in &chars {
            assert!(c.iter().all(|x| x.is_one() || (-x).is_one()));
        }
        let z4 = build_group(&GroupSpec::Abelian(vec![4]));
        let chars = character_group(&z4);
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().any(|c| c[1] == GaussianRational::i()));
        // D₈ has exactly 4 one-dimensional characters.
        let d8 = build_group(&GroupSpec::Dihedral(4));
        assert_eq!(character_group(&d8).len(), 4);
    }

    #[test]
    fn group_algebras_verify() {
        for spec in [
            GroupSpec::Abelian(vec![2, 2]),
            GroupSpec::Dihedral(4),
            GroupSpec::Quaternion8,
        ] {
            let g = build_group(&spec);
            let h = group_algebra(&g);
            assert!(h.verify_hopf().passed(), "K[G] for {spec:?}");
            let solved = solve_antipode(&h).unwrap();
            assert_eq!(Some(solved), h.antipode, "antipode for {spec:?}");
            let d = dual_group_algebra(&g);
            assert!(d.verify_hopf().passed(), "K^G for {spec:?}");
        }
    }

    #[test]
    fn center_dimension_of_dihedral_group_algebra() {
        // The conjugacy-class count of D₈ is 5.
        let d8 = build_group(&GroupSpec::Dihedral(4));
        let mut classes = 0;
        let mut seen = vec![false; 8];
        for x in 0..8 {
            if seen[x] {
                continue;
            }
            classes += 1;
            for g in 0..8 {
                seen[d8.mul(d8.mul(g, x), d8.inv(g))] = true;
            }
        }
        assert_eq!(classes, 5);
    }

    #[test]
    fn bicharacter_validation() {
        let v4 = build_group(&GroupSpec::Abelian(vec![2, 2]));
        let one = GaussianRational::one;
        // θ(g_i, g_j) = (−1)^{count of shared generator exponents}: the
        // standard nondegenerate symmetric bicharacter on ℤ₂×ℤ₂.
        let sign = |i: usize, j: usize| {
            let (a1, a2) = (i & 1, i >> 1);
            let (b1, b2) = (j & 1, j >> 1);
            GaussianRational::from_int(if (a1 * b1 + a2 * b2) % 2 == 0 { 1 } else { -1 })
        };
        let table = Matrix::from_fn(4, 4, |i, j| sign(i, j));
        let theta = Bicharacter::from_table(&v4, table).unwrap();
        assert!(theta.nondegenerate);

        // All-ones table: valid but completely degenerate.
        let trivial = Matrix::from_fn(4, 4, |_, _| one());
        let theta = Bicharacter::from_table(&v4, trivial).unwrap();
        assert!(!theta.nondegenerate);

        // Break symmetry (and bimultiplicativity) at a single entry.
        let mut bad = Matrix::from_fn(4, 4, |_, _| one());
        bad[(1, 2)] = -&one();
        assert!(Bicharacter::from_table(&v4, bad).is_err());
    }
}
