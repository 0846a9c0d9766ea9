//! Small SELAs used by the tests, the self-check and the documentation.

use super::sela::{Sela, SelaMorphism, Simplex};
use crate::exactnum::SparseMatrix;
use crate::liecore::{BasisVector, StructLie};
use crate::scalar::Scalar;
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn bv(name: String, degree: i32) -> BasisVector {
    BasisVector { name, degree }
}

/// Lie algebra spanned by matrix units `E_ij` (closed under commutators),
/// with its defining representation attached.
pub fn matrix_units(size: usize, units: &[(usize, usize)]) -> StructLie<Rational> {
    let idx = |u: (usize, usize)| units.iter().position(|&v| v == u);
    let basis = units
        .iter()
        .map(|(i, j)| bv(format!("e{}{}", i + 1, j + 1), 0))
        .collect();
    let mut entries = Vec::new();
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
            if j == k {
                entries.push((a, b, idx((i, l)).expect("units not closed"), q(1)));
            }
            if l == i {
                entries.push((a, b, idx((k, j)).expect("units not closed"), q(-1)));
            }
        }
    }
    let rep = units
        .iter()
        .map(|&(i, j)| {
            let mut m = SparseMatrix::zeros(size, size);
            m.set(i, j, q(1));
            m
        })
        .collect();
    StructLie::new(basis, &entries, None)
        .and_then(|l| l.with_representation(rep))
        .expect("matrix units give a Lie algebra")
}

/// Strictly upper-triangular 3×3 matrices.
pub fn n3() -> StructLie<Rational> {
    matrix_units(3, &[(0, 1), (1, 2), (0, 2)])
}

/// Upper-triangular 3×3 matrices.
pub fn b3() -> StructLie<Rational> {
    matrix_units(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)])
}

/// All simplices of dimension ≤ 2 on `n` vertices.
pub fn all_simplices(n: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    for a in 0..n {
        out.push(vec![a]);
        for b in a + 1..n {
            out.push(vec![a, b]);
            for c in b + 1..n {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// The Čech-type SELA on `n` vertices assigning `lie(S)` to every simplex
/// with `|S| ≤ max_len`; the homomorphisms between faces are `proj(face, simplex)`.
pub fn cech(
    n: usize,
    order: usize,
    max_len: usize,
    lie: impl Fn(&[usize]) -> StructLie<Rational>,
    proj: impl Fn(&[usize], &[usize]) -> SparseMatrix<Rational>,
) -> Sela {
    let mut s = Sela::with_size(n, order);
    let simplices: Vec<Simplex> = all_simplices(n)
        .into_iter()
        .filter(|s| s.len() <= max_len)
        .collect();
    for sx in &simplices {
        s.set_algebra(sx.clone(), lie(sx)).unwrap();
    }
    for t in &simplices {
        if t.len() < 2 {
            continue;
        }
        for p in 0..t.len() {
            let mut f = t.clone();
            f.remove(p);
            s.set_homomorphism(f.clone(), t.clone(), proj(&f, t))
                .unwrap();
        }
    }
    s
}

/// Triangle with `n3` on every simplex and identity homomorphisms.
pub fn triangle_n3(order: usize) -> Sela {
    cech(3, order, 3, |_| n3(), |_, _| SparseMatrix::identity(3))
}

/// Triangle with the upper-triangular `b3` on every simplex.
pub fn triangle_b3(order: usize) -> Sela {
    cech(3, order, 3, |_| b3(), |_, _| SparseMatrix::identity(6))
}

/// Two-vertex, one-edge SELA with `n3` everywhere.
pub fn edge_n3(order: usize) -> Sela {
    cech(2, order, 2, |_| n3(), |_, _| SparseMatrix::identity(3))
}

/// One-dimensional abelian algebra on every simplex of a triangle.
pub fn abelian_line() -> StructLie<Rational> {
    StructLie::abelian(vec![bv("u".into(), 0)])
}

/// The full triangle with the one-dimensional abelian algebra everywhere.
pub fn abelian_triangle(order: usize) -> Sela {
    cech(
        3,
        order,
        3,
        |_| abelian_line(),
        |_, _| SparseMatrix::identity(1),
    )
}

/// The boundary of a triangle (no 2-simplex) with the one-dimensional
/// abelian algebra: its standard complex has one-dimensional `H¹`.
pub fn abelian_hollow_triangle(order: usize) -> Sela {
    cech(
        3,
        order,
        2,
        |_| abelian_line(),
        |_, _| SparseMatrix::identity(1),
    )
}

/// Lie pair `𝔤 ⊂ 𝔥`: `n3` on vertex 0, nothing on vertex 1 and `b3` on the
/// edge, with the inclusion as homomorphism.
pub fn lie_pair(order: usize) -> Sela {
    let mut s = Sela::with_size(2, order);
    s.set_algebra(vec![0], n3()).unwrap();
    s.set_algebra(vec![0, 1], b3()).unwrap();
    let mut inc = SparseMatrix::zeros(6, 3);
    for (a, b) in [(0, 3), (1, 4), (2, 5)] {
        inc.set(b, a, q(1));
    }
    s.set_homomorphism(vec![0], vec![0, 1], inc).unwrap();
    s
}

/// `r₂ ⊗ Λ(e₁,e₂)` with `r₂ = ⟨a,b⟩`, `[a,b] = b`, and differential
/// `ad(a⊗e₁)`. Internal degrees 0, 1, 2.
pub fn r2_exterior() -> StructLie<Rational> {
    // Λ basis: 1, e1, e2, e1e2 with product table
    let forms: [(&str, i32); 4] = [("", 0), ("e1", 1), ("e2", 1), ("e12", 2)];
    let wedge = |x: usize, y: usize| -> Option<(usize, i64)> {
        match (x, y) {
            (0, k) | (k, 0) => Some((k, 1)),
            (1, 2) => Some((3, 1)),
            (2, 1) => Some((3, -1)),
            _ => None,
        }
    };
    // r2 structure: [a,b] = b
    let lie_br = |x: usize, y: usize| -> Option<(usize, i64)> {
        match (x, y) {
            (0, 1) => Some((1, 1)),
            (1, 0) => Some((1, -1)),
            _ => None,
        }
    };
    let names = ["a", "b"];
    let index = |g: usize, f: usize| f * 2 + g;
    let mut basis = Vec::new();
    for (fname, deg) in forms.iter() {
        for gname in names.iter() {
            let name = if fname.is_empty() {
                gname.to_string()
            } else {
                format!("{gname}{fname}")
            };
            basis.push(bv(name, *deg));
        }
    }
    let mut entries = Vec::new();
    for f1 in 0..4 {
        for f2 in 0..4 {
            let Some((f3, s1)) = wedge(f1, f2) else {
                continue;
            };
            for g1 in 0..2 {
                for g2 in 0..2 {
                    if let Some((g3, s2)) = lie_br(g1, g2) {
                        entries.push((index(g1, f1), index(g2, f2), index(g3, f3), q(s1 * s2)));
                    }
                }
            }
        }
    }
    let plain = StructLie::new(basis.clone(), &entries, None).unwrap();
    // differential y ↦ [a⊗e1, y]
    let mu = index(0, 1);
    let n = basis.len();
    let mut d = SparseMatrix::zeros(n, n);
    for y in 0..n {
        if let Some(w) = plain.bracket_basis(mu, y) {
            for (c, x) in w {
                d.set(*c, y, x.clone());
            }
        }
    }
    StructLie::new(basis, &entries, Some(d)).unwrap()
}

/// Quotient of a graded algebra by its part of degree `> top`, together with
/// the projection.
pub fn truncate_above(
    l: &StructLie<Rational>,
    top: i32,
) -> (StructLie<Rational>, SparseMatrix<Rational>) {
    let keep: Vec<usize> = (0..l.dim()).filter(|&a| l.degree(a) <= top).collect();
    let pos = |a: usize| keep.iter().position(|&k| k == a);
    let basis = keep.iter().map(|&a| l.basis()[a].clone()).collect();
    let mut entries = Vec::new();
    for (a, b, w) in l.bracket_entries() {
        let (Some(pa), Some(pb)) = (pos(a), pos(b)) else {
            continue;
        };
        for (c, x) in w {
            if let Some(pc) = pos(*c) {
                entries.push((pa, pb, pc, x.clone()));
            }
        }
    }
    let mut d = SparseMatrix::zeros(keep.len(), keep.len());
    for (i, j, x) in l.differential().entries() {
        if let (Some(pi), Some(pj)) = (pos(i), pos(j)) {
            d.set(pi, pj, x.clone());
        }
    }
    let mut proj = SparseMatrix::zeros(keep.len(), l.dim());
    for (p, &a) in keep.iter().enumerate() {
        proj.set(p, a, q(1));
    }
    (StructLie::new(basis, &entries, Some(d)).unwrap(), proj)
}

/// Čech-type SELA of a dgla `L` with degrees 0..2 on `n ≤ 3` vertices:
/// `L` on vertices, `L/L^{≥2}` on edges, `L/L^{≥1}` on the triangle.
pub fn cech_of_dgla(l: &StructLie<Rational>, n: usize, order: usize) -> Sela {
    let pieces: Vec<(StructLie<Rational>, SparseMatrix<Rational>)> =
        (0..3).map(|k| truncate_above(l, 2 - k)).collect();
    cech(
        n,
        order,
        3,
        |s| pieces[s.len() - 1].0.clone(),
        |f, t| {
            // projection L_{≤2-|f|+1} → L_{≤2-|t|+1}, both quotients of L
            let pf = &pieces[f.len() - 1].1;
            let pt = &pieces[t.len() - 1].1;
            pt.mul(&pf.transpose())
        },
    )
}

/// Čech SELA of [`r2_exterior`] on three vertices.
pub fn cech_dg(order: usize) -> Sela {
    cech_of_dgla(&r2_exterior(), 3, order)
}

/// One chart with `𝔤¹ = ⟨a,b⟩`, `𝔤² = ⟨c⟩`, `[a,b] = c`: the first-order
/// deformation `t(a+b)` is obstructed.
pub fn obstructed_chart(order: usize) -> Sela {
    let basis = vec![bv("a".into(), 1), bv("b".into(), 1), bv("c".into(), 2)];
    let lie = StructLie::new(basis, &[(0, 1, 2, q(1))], None).unwrap();
    let mut s = Sela::with_size(1, order);
    s.set_algebra(vec![0], lie).unwrap();
    s
}

/// The quotient `n3 → ⟨e12⟩` on every simplex of the triangle.
pub fn n3_to_abelian() -> SelaMorphism {
    let mut f = SparseMatrix::zeros(1, 3);
    f.set(0, 0, q(1));
    SelaMorphism {
        maps: all_simplices(3)
            .into_iter()
            .map(|s| (s, f.clone()))
            .collect(),
    }
}
