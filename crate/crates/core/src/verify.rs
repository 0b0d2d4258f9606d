//! Exhaustive verification suites over small polygons.
//!
//! Each suite returns a [`SuiteReport`] counting the individual checks it
//! made and recording (the first few) failures in human-readable form.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::hom::{
    ar_mesh, ar_quiver, crossing_triangles, ext1_dim, factors_from, factors_to, hom_dim_from,
    hom_dim_to,
};
use crate::mutation::{backward_replace, forward_replace};
use crate::polygon::{Arc, Diagonal, Polygon};
use crate::ptolemy::{
    brute_force_ptolemy, cell_decomposition, enumerate_ptolemy, extension_closed_oracle,
    is_ptolemy, subset, CellKind, Diagram, DEFAULT_ENUMERATION_BOUND,
};
use crate::weak_ar::{
    ext_injectives, ext_projectives, left_weak_ar, right_weak_ar, uniqueness_check, verify_cover,
    verify_envelope, verify_minimal_left_almost_split, verify_minimal_right_almost_split,
};

const MAX_RECORDED_FAILURES: usize = 20;

/// Largest polygon for which subset brute force is run exhaustively.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 7;
/// Random subsets drawn per polygon size above [`EXHAUSTIVE_SUBSET_LIMIT`].
pub const RANDOM_SUBSETS: usize = 100_000;
const RANDOM_SEED: u64 = 0x005e_ed0f_d1a9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    PtolemyEquivalence,
    HomCriteria,
    Structural,
    WeakAr,
    TheoremB,
    TheoremC,
    Uniqueness,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::PtolemyEquivalence,
        Suite::HomCriteria,
        Suite::Structural,
        Suite::WeakAr,
        Suite::TheoremB,
        Suite::TheoremC,
        Suite::Uniqueness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::PtolemyEquivalence => "ptolemy-equivalence",
            Suite::HomCriteria => "hom-criteria",
            Suite::Structural => "structural",
            Suite::WeakAr => "weak-ar",
            Suite::TheoremB => "theorem-b",
            Suite::TheoremC => "theorem-c",
            Suite::Uniqueness => "uniqueness",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Runs the suite on every polygon with `4..=max_size` vertices.
    pub fn run(&self, max_size: usize) -> SuiteReport {
        match self {
            Suite::PtolemyEquivalence => ptolemy_equivalence(max_size, RANDOM_SUBSETS),
            Suite::HomCriteria => hom_criteria(max_size),
            Suite::Structural => structural(max_size),
            Suite::WeakAr => weak_ar_suite(max_size),
            Suite::TheoremB => theorem_b(max_size),
            Suite::TheoremC => theorem_c(max_size),
            Suite::Uniqueness => uniqueness(max_size),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Number of checks that failed.
    pub failed: u64,
    /// Descriptions of the first failures.
    pub failures: Vec<String>,
    /// Extra counters, e.g. number of diagrams visited.
    pub notes: Vec<(String, u64)>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
        for (k, v) in other.notes {
            self.note(&k, v);
        }
        self
    }

    fn note(&mut self, key: &str, value: u64) {
        match self.notes.iter_mut().find(|(k, _)| k == key) {
            Some((_, total)) => *total += value,
            None => self.notes.push((key.to_string(), value)),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {}/{} checks",
            self.name,
            self.checked - self.failed,
            self.checked
        )?;
        for (k, v) in &self.notes {
            write!(f, ", {k}={v}")?;
        }
        for failure in &self.failures {
            write!(f, "\n  - {failure}")?;
        }
        Ok(())
    }
}

fn polygons(min: usize, max: usize) -> impl Iterator<Item = Polygon> {
    (min.max(Polygon::MIN_SIZE)..=max).map(|n| Polygon::new(n).expect("size ≥ 4"))
}

/// Ptolemy diagrams of every polygon with `4..=max_size` vertices.
pub fn ptolemy_diagrams(max_size: usize) -> Vec<Diagram> {
    let max = max_size.min(DEFAULT_ENUMERATION_BOUND);
    polygons(4, max)
        .flat_map(|p| enumerate_ptolemy(&p, DEFAULT_ENUMERATION_BOUND).expect("within bound"))
        .collect()
}

fn per_diagram<F>(name: &str, max_size: usize, f: F) -> SuiteReport
where
    F: Fn(&Diagram, &mut SuiteReport) + Sync,
{
    let diagrams = ptolemy_diagrams(max_size);
    let count = diagrams.len() as u64;
    let mut report = diagrams
        .par_iter()
        .map(|d| {
            let mut r = SuiteReport::new(name);
            f(d, &mut r);
            r
        })
        .reduce(|| SuiteReport::new(name), SuiteReport::merge);
    report.note("diagrams", count);
    report
}

fn check_subset(d: &Diagram, r: &mut SuiteReport) {
    let ptolemy = is_ptolemy(d);
    r.check(ptolemy == extension_closed_oracle(d), || {
        format!(
            "Ptolemy={ptolemy} but extension-closed={} for {d}",
            !ptolemy
        )
    });
    let glued = !cell_decomposition(d).has_mixed_cell();
    r.check(ptolemy == glued, || {
        format!("Ptolemy={ptolemy} but empty/clique gluing={glued} for {d}")
    });
    r.check(ptolemy == is_ptolemy(&d.suspended()), || {
        format!("rotation changes the Ptolemy property of {d}")
    });
}

/// Ptolemy ⇔ extension-closed on every subset for `N ≤ 7` and on random
/// subsets above; structural enumeration against brute force.
pub fn ptolemy_equivalence(max_size: usize, random_samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::PtolemyEquivalence.name());
    for p in polygons(4, max_size) {
        let all = p.all_diagonals();
        if p.size() <= EXHAUSTIVE_SUBSET_LIMIT {
            let sub = (0u64..1 << all.len())
                .into_par_iter()
                .map(|mask| {
                    let mut r = SuiteReport::new(&report.name);
                    check_subset(&subset(&p, &all, mask), &mut r);
                    r
                })
                .reduce(|| SuiteReport::new(&report.name), SuiteReport::merge);
            report = report.merge(sub);
            report.note("subsets", 1 << all.len());

            let brute = brute_force_ptolemy(&p);
            let structural = enumerate_ptolemy(&p, DEFAULT_ENUMERATION_BOUND).expect("small");
            report.check(brute == structural, || {
                format!(
                    "{p}: {} structural vs {} brute-force diagrams",
                    structural.len(),
                    brute.len()
                )
            });
        } else {
            let mut rng = StdRng::seed_from_u64(RANDOM_SEED ^ p.size() as u64);
            let masks: Vec<u64> = (0..random_samples)
                .map(|_| rng.gen::<u64>() & ((1u64 << all.len()) - 1))
                .collect();
            let sub = masks
                .par_iter()
                .map(|&mask| {
                    let mut r = SuiteReport::new(&report.name);
                    check_subset(&subset(&p, &all, mask), &mut r);
                    r
                })
                .reduce(|| SuiteReport::new(&report.name), SuiteReport::merge);
            report = report.merge(sub);
            report.note("subsets", random_samples as u64);
        }
    }
    report
}

/// The two Hom criteria agree with each other and with `Hom(x, y) =
/// Ext^1(x, Σ⁻¹y)`; 2-Calabi-Yau symmetry; factoring sanity.
pub fn hom_criteria(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::HomCriteria.name());
    for p in polygons(4, max_size) {
        let all = p.all_diagonals();
        let sub = all
            .par_iter()
            .map(|&x| {
                let mut r = SuiteReport::new(Suite::HomCriteria.name());
                for &y in &all {
                    check_hom_pair(&p, &all, x, y, &mut r);
                }
                r
            })
            .reduce(
                || SuiteReport::new(Suite::HomCriteria.name()),
                SuiteReport::merge,
            );
        report = report.merge(sub);
        report.note("pairs", (all.len() * all.len()) as u64);
    }
    report
}

fn check_hom_pair(p: &Polygon, all: &[Diagonal], x: Diagonal, y: Diagonal, r: &mut SuiteReport) {
    let from = hom_dim_from(p, x, y);
    let to = hom_dim_to(p, x, y);
    r.check(from == to, || {
        format!("{p}: Hom({x},{y}) outgoing={from} incoming={to}")
    });
    let shifted = p.crosses(x, p.suspend_inverse_diagonal(y)) as u8;
    r.check(from == shifted, || {
        format!("{p}: Hom({x},{y})={from} but x crosses Σ⁻¹y is {shifted}")
    });
    let ext = ext1_dim(p, x, y);
    let sy = p.suspend_diagonal(y);
    let sx = p.suspend_diagonal(x);
    r.check(hom_dim_from(p, x, sy) == ext, || {
        format!("{p}: Hom({x},Σ{y}) ≠ Ext¹({x},{y})")
    });
    r.check(hom_dim_from(p, x, sy) == hom_dim_from(p, y, sx), || {
        format!("{p}: 2-CY symmetry fails for {x},{y}")
    });
    if from == 0 {
        return;
    }
    for &s in all {
        let via_from = factors_from(p, x, y, s.arc()).expect("nonzero");
        let via_to = factors_to(p, x, y, s.arc()).expect("nonzero");
        r.check(via_from == via_to, || {
            format!("{p}: {x}->{y} through {s}: outgoing rule {via_from}, incoming rule {via_to}")
        });
        if via_from {
            r.check(
                hom_dim_from(p, x, s) == 1 && hom_dim_from(p, s, y) == 1,
                || format!("{p}: {x}->{y} factors through {s} without maps {x}->{s}->{y}"),
            );
        }
    }
    let identity = factors_from(p, x, y, x.arc()).expect("nonzero")
        && factors_from(p, x, y, y.arc()).expect("nonzero")
        && factors_to(p, x, y, x.arc()).expect("nonzero")
        && factors_to(p, x, y, y.arc()).expect("nonzero");
    r.check(identity, || {
        format!("{p}: {x}->{y} does not factor through its ends")
    });
}

fn arcs_set(arcs: impl IntoIterator<Item = Arc>) -> BTreeSet<Arc> {
    arcs.into_iter().collect()
}

/// Suspension, diagonal counts, AR quiver degrees and meshes, and the shape of
/// the crossing-pair triangles.
pub fn structural(max_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Structural.name());
    for p in polygons(4, max_size) {
        let n = p.size();
        let all = p.all_diagonals();
        r.check(all.len() == n * (n - 3) / 2, || {
            format!("{p}: {} diagonals", all.len())
        });
        for u in p.vertices() {
            for v in p.vertices().filter(|&v| v != u) {
                let a = p.arc(u, v).expect("distinct");
                let mut b = a;
                for _ in 0..n {
                    b = p.suspend(b);
                }
                r.check(a == b, || format!("{p}: Σ^{n}{a} = {b}"));
                r.check(p.suspend_inverse(p.suspend(a)) == a, || {
                    format!("{p}: Σ⁻¹Σ{a} ≠ {a}")
                });
            }
        }

        let q = ar_quiver(&p);
        r.check(q.nodes == all, || {
            format!("{p}: quiver nodes differ from diagonals")
        });
        for &d in &all {
            let (i, o) = (q.in_degree(d), q.out_degree(d));
            let allowed = if n == 4 { i == 0 } else { (1..=2).contains(&i) };
            r.check(i == o && allowed, || {
                format!("{p}: {d} has in-degree {i}, out-degree {o}")
            });

            let mesh: BTreeSet<_> = ar_mesh(&p, d).into_iter().collect();
            r.check(mesh == q.predecessors(d), || {
                format!("{p}: mesh {mesh:?} of {d} differs from its predecessors")
            });
            let (d0, d1) = d.endpoints();
            let expected: BTreeSet<_> = [(p.step(d0, -1), d1), (d0, p.step(d1, -1))]
                .into_iter()
                .filter_map(|(u, v)| p.diagonal(u, v).ok())
                .collect();
            r.check(mesh == expected, || format!("{p}: mesh of {d} is {mesh:?}"));
            let sd = p.suspend_diagonal(d);
            for m in &mesh {
                r.check(q.successors(sd).contains(m), || {
                    format!("{p}: no arrow Σ{d} -> {m}")
                });
            }
            for t in q.successors(d) {
                r.check(hom_dim_from(&p, d, t) == 1, || {
                    format!("{p}: arrow {d}->{t} has Hom 0")
                });
            }
            let t = crossing_triangles(&p, sd, d).expect("crosses its suspension");
            r.check(t.nonzero_s(&p).is_empty(), || {
                format!("{p}: (Σ{d},{d}) has nonzero s-side")
            });
        }

        for &a in &all {
            for &c in all.iter().filter(|&&c| p.crosses(a, c)) {
                let t = crossing_triangles(&p, a, c).expect("crossing");
                let (a0, a1) = a.endpoints();
                let (c0, c1) = c.endpoints();
                let sides = arcs_set(
                    [(a0, c0), (a0, c1), (a1, c0), (a1, c1)].map(|(u, v)| p.arc(u, v).unwrap()),
                );
                let b = arcs_set(t.b_pair);
                let s = arcs_set(t.s_pair);
                r.check(b.len() == 2 && s.len() == 2 && b.is_disjoint(&s), || {
                    format!("{p}: b/s pairs of ({a},{c}) overlap")
                });
                r.check(
                    b.union(&s).copied().collect::<BTreeSet<_>>() == sides,
                    || format!("{p}: triangles of ({a},{c}) are not the quadrilateral"),
                );
                let (sa, sc) = (p.suspend_diagonal(a), p.suspend_diagonal(c));
                let rotated = crossing_triangles(&p, sa, sc).expect("rotation keeps crossing");
                r.check(
                    arcs_set(rotated.b_pair) == arcs_set(t.b_pair.map(|x| p.suspend(x))),
                    || format!("{p}: b-pair of ({a},{c}) is not rotation-equivariant"),
                );
                // the b-triangle of (a, c) is the s-triangle of (c, a)
                let swapped = crossing_triangles(&p, c, a).expect("crossing");
                r.check(arcs_set(swapped.s_pair) == b, || {
                    format!("{p}: ({a},{c}) vs ({c},{a})")
                });
            }
        }
    }
    r
}

fn check_projectives(d: &Diagram, r: &mut SuiteReport) {
    let p = d.polygon();
    let projectives = ext_projectives(d);
    r.check(projectives == ext_injectives(d), || {
        format!("projectives ≠ injectives in {d}")
    });
    for m in d.iter() {
        let no_cover = d
            .iter()
            .all(|e| hom_dim_from(p, e, p.suspend_diagonal(m)) == 0);
        r.check(projectives.contains(&m) == no_cover, || {
            format!(
                "{m} in {d}: dissecting={} but zero cover of Σ{m}={no_cover}",
                projectives.contains(&m)
            )
        });
    }
}

/// Left and right weak Auslander-Reiten triangles at every Ext-projective of
/// every Ptolemy diagram.
pub fn weak_ar_suite(max_size: usize) -> SuiteReport {
    per_diagram(Suite::WeakAr.name(), max_size, |d, r| {
        let p = d.polygon();
        check_projectives(d, r);
        for c in ext_projectives(d) {
            let t = left_weak_ar(d, c).expect("dissecting");
            r.check(!d.contains(t.x), || format!("x={} lies in {d}", t.x));
            r.check(
                verify_minimal_right_almost_split(d, &t).expect("left"),
                || format!("B -> {c} is not minimal right almost split in {d}"),
            );
            r.check(
                verify_envelope(d, t.x, t.b0, t.b1).expect("x outside"),
                || format!("{} -> B is not an envelope in {d}", t.x),
            );
            let tri = crossing_triangles(p, t.x, c).expect("x crosses c");
            r.check(arcs_set(tri.b_pair) == arcs_set([t.b0, t.b1]), || {
                format!("left triangle at {c} in {d} differs from the crossing triangle")
            });

            let u = right_weak_ar(d, c).expect("dissecting");
            r.check(!d.contains(u.x), || format!("z={} lies in {d}", u.x));
            r.check(
                verify_minimal_left_almost_split(d, &u).expect("right"),
                || format!("{c} -> B is not minimal left almost split in {d}"),
            );
            r.check(verify_cover(d, u.x, u.b0, u.b1).expect("z outside"), || {
                format!("B -> {} is not a cover in {d}", u.x)
            });
            let tri = crossing_triangles(p, u.x, c).expect("z crosses a");
            r.check(arcs_set(tri.s_pair) == arcs_set([u.b0, u.b1]), || {
                format!("right triangle at {c} in {d} differs from the crossing triangle")
            });
        }
    })
}

pub fn uniqueness(max_size: usize) -> SuiteReport {
    per_diagram(Suite::Uniqueness.name(), max_size, |d, r| {
        r.check(uniqueness_check(d), || {
            format!("c ↦ x is not injective on {d}")
        });
    })
}

/// Remove-and-replace is extension-closed exactly when the inserted diagonal
/// is Ext-projective in the result, exactly when both bordering cells are
/// empty.
pub fn theorem_b(max_size: usize) -> SuiteReport {
    per_diagram(Suite::TheoremB.name(), max_size, |d, r| {
        for c in ext_projectives(d) {
            for report in [backward_replace(d, c), forward_replace(d, c)] {
                let m = report.expect("dissecting");
                let (closed, proj, empty) = (
                    m.extension_closed,
                    m.x_ext_projective_in_result,
                    m.criterion_two_empty_cells,
                );
                r.check(!proj || closed, || {
                    format!("{:?} at {c} in {d}: (a) fails", m.direction)
                });
                r.check(!closed || proj, || {
                    format!("{:?} at {c} in {d}: (b) fails", m.direction)
                });
                r.check(closed == empty, || {
                    format!(
                        "{:?} at {c} in {d}: closed={closed}, two empty cells={empty}",
                        m.direction
                    )
                });
            }
        }
    })
}

/// Wherever both cells at `c` are empty, the `D`-cover of `c` is the middle of
/// the left-weak triangle and mutation back restores the diagram.
pub fn theorem_c(max_size: usize) -> SuiteReport {
    per_diagram(Suite::TheoremC.name(), max_size, |d, r| {
        let p = d.polygon();
        let projectives = ext_projectives(d);
        for c in &projectives {
            let cells = cell_decomposition(d);
            let empty = cells
                .cells_bordering(*c)
                .iter()
                .all(|cell| cell.kind == CellKind::Empty);
            if !empty {
                continue;
            }
            r.note("applicable", 1);
            let rest: Vec<_> = projectives.iter().filter(|&e| e != c).collect();
            let rigid = rest
                .iter()
                .all(|&&a| rest.iter().all(|&&b| !p.crosses(a, b)));
            r.check(rigid, || format!("D is not rigid for {c} in {d}"));

            let m = backward_replace(d, *c).expect("dissecting");
            let Some(tc) = m.theorem_c.as_ref() else {
                r.check(false, || format!("no cover report at {c} in {d}"));
                continue;
            };
            r.check(
                tc.cover_in_d
                    && tc.cover_is_precover
                    && tc.cover_is_right_minimal
                    && tc.equals_inserted,
                || format!("D-cover check fails at {c} in {d}: {:?}", tc.reason),
            );
            r.check(tc.mu_of_removed == m.inserted && m.extension_closed, || {
                format!("μ(C;D) ≠ C' at {c} in {d}")
            });
            let back = forward_replace(&m.result, m.inserted).expect("x is dissecting in C'");
            r.check(back.result == *d, || {
                format!("flip at {c} in {d} is not an involution")
            });

            let f = forward_replace(d, *c).expect("dissecting");
            let env = f
                .theorem_c
                .as_ref()
                .map(|t| t.equals_inserted)
                .unwrap_or(false);
            r.check(env && f.extension_closed, || {
                format!("D-envelope check fails at {c} in {d}")
            });
        }
    })
}
