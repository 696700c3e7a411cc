//! The derived geometry at `inf`: vertical lines `B_(x,y,a)` and the
//! spheres through `inf` with a finite gnarl.

use serde::Serialize;

use crate::blocks::Block;
use crate::error::{Error, Result};
use crate::moufang::{MoufangPoint, MoufangSet};
use crate::root_groups::{R1Coord, R2Coord};
use crate::sample::Sampler;

/// The vertical line `B_(x,y,a)`.
pub fn vertical(k: &R1Coord) -> Block {
    Block::sphere(
        MoufangPoint::Inf,
        MoufangPoint::Label(k.clone(), R2Coord::zero()),
    )
    .expect("inf differs from a label")
}

/// The sphere through `inf` with gnarl `g`.
pub fn non_vertical(g: &MoufangPoint) -> Result<Block> {
    Block::sphere(g.clone(), MoufangPoint::Inf)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failed == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NetReport {
    pub vertical_disjoint: Tally,
    pub unique_intersection: Tally,
    pub parallel_disjoint: Tally,
}

impl NetReport {
    pub fn passed(&self) -> bool {
        self.vertical_disjoint.passed()
            && self.unique_intersection.passed()
            && self.parallel_disjoint.passed()
    }
}

impl MoufangSet {
    /// The point of the sphere through `inf` with gnarl `g` whose first
    /// coordinate is `k`: `[k + g1, 0] g`.
    pub fn non_vertical_point(&self, g: &MoufangPoint, k: &R1Coord) -> Result<MoufangPoint> {
        let Some((g1, _)) = g.parts() else {
            return Err(Error::Precondition(
                "gnarl inf gives a vertical line".into(),
            ));
        };
        let p = MoufangPoint::Label(k.add(g1), R2Coord::zero());
        self.act(&p, &g.as_uinf().expect("finite gnarl"))
    }

    /// The common points of a vertical and a non-vertical line.
    pub fn meet(&self, k: &R1Coord, g: &MoufangPoint) -> Result<Vec<MoufangPoint>> {
        let p = self.non_vertical_point(g, k)?;
        let (v, b) = (vertical(k), non_vertical(g)?);
        Ok(
            if self.sphere_contains_geometric(&v, &p)? && self.sphere_contains_geometric(&b, &p)? {
                vec![p]
            } else {
                Vec::new()
            },
        )
    }

    /// Check the net axioms on `n` sampled configurations of each kind.
    pub fn net_report(&self, s: &mut Sampler, n: usize) -> Result<NetReport> {
        let inst = self.rel().inst.clone();
        let mut r = NetReport::default();
        for i in 0..n {
            let (k, k2) = (s.r1(&inst), s.r1(&inst));
            if k == k2 {
                continue;
            }
            let p = MoufangPoint::Label(k.clone(), s.r2());
            let on_other = self.sphere_contains_geometric(&vertical(&k2), &p)?;
            let on_other_flat = self.sphere_at_infinity_contains(&vertical(&k2), &p)?;
            r.vertical_disjoint.record(!on_other && !on_other_flat, || {
                format!("{p} lies on B_{k} and B_{k2}")
            });

            let g = if i == 0 {
                MoufangPoint::zero()
            } else {
                MoufangPoint::Label(s.r1(&inst), s.r2())
            };
            let m = self.meet(&k, &g)?;
            let expected_zero = i > 0 || m == [MoufangPoint::Label(k.clone(), R2Coord::zero())];
            r.unique_intersection
                .record(m.len() == 1 && expected_zero, || {
                    format!("B_{k} meets B_{g} in {m:?}")
                });

            let (g1, h2) = (s.r1(&inst), s.r2());
            let g = MoufangPoint::Label(g1.clone(), s.r2());
            let h = MoufangPoint::Label(g1, h2);
            if g == h {
                continue;
            }
            let x = s.r1(&inst);
            let pg = self.non_vertical_point(&g, &x)?;
            let ph = self.non_vertical_point(&h, &x)?;
            let cross = self.sphere_contains_geometric(&non_vertical(&h)?, &pg)?;
            r.parallel_disjoint
                .record(pg != ph && !cross, || format!("B_{g} and B_{h} share {pg}"));
        }
        Ok(r)
    }
}
