//! The quadrangle rebuilt from points and spheres: points `x_p`, `B_p`,
//! lines `x_l`, `B_l`.

use std::collections::HashSet;

use serde::Serialize;

use crate::blocks::{Block, BlockKind};
use crate::error::{Error, Result};
use crate::moufang::{MoufangPoint, MoufangSet};
use crate::net::Tally;
use crate::quadrangle::{QLine, QPoint};
use crate::sample::Sampler;

/// A sphere together with its images as a point and as a line.
#[derive(Clone, Debug)]
pub struct SphereImage {
    pub block: Block,
    pub point: QPoint,
    pub line: QLine,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ReconstructionReport {
    pub points: usize,
    pub spheres: usize,
    pub point_line: Tally,
    pub gnarl_rule: Tally,
    pub sphere_sphere: Tally,
    pub sphere_sphere_incident: usize,
    pub injective: Tally,
    pub polarity_swap: Tally,
}

impl ReconstructionReport {
    pub fn passed(&self) -> bool {
        self.sphere_sphere_incident > 0
            && [
                &self.point_line,
                &self.gnarl_rule,
                &self.sphere_sphere,
                &self.injective,
                &self.polarity_swap,
            ]
            .iter()
            .all(|t| t.passed())
    }
}

impl MoufangSet {
    /// `B_p`: the projection of the base point onto the gnarl line.
    /// `B_l`: the line through the gnarl point meeting the base line.
    pub fn sphere_image(&self, b: &Block) -> Result<SphereImage> {
        if b.kind != BlockKind::Sphere {
            return Err(Error::Precondition(format!("{b} is not a sphere")));
        }
        let fg = self.flag(&b.gnarl)?;
        let fb = self.flag(&b.base)?;
        let point = self.quad.project(&fb.p, &fg.l)?;
        let foot = self.quad.project(&fg.p, &fb.l)?;
        let line = self
            .quad
            .collinear(&fg.p, &foot)?
            .ok_or_else(|| Error::Precondition(format!("{foot} is not collinear with {}", fg.p)))?;
        Ok(SphereImage {
            block: b.clone(),
            point,
            line,
        })
    }

    /// Check the incidence rules and the polarity on a sample.
    pub fn reconstruct(
        &self,
        points: &[MoufangPoint],
        spheres: &[Block],
    ) -> Result<ReconstructionReport> {
        let mut r = ReconstructionReport {
            points: points.len(),
            spheres: spheres.len(),
            ..Default::default()
        };
        let flags = points
            .iter()
            .map(|x| self.flag(x))
            .collect::<Result<Vec<_>>>()?;
        let images = spheres
            .iter()
            .map(|b| self.sphere_image(b))
            .collect::<Result<Vec<_>>>()?;

        let n = points.len();
        for i in 0..n {
            for j in [i, (i + 1) % n, (i + 7) % n] {
                let inc = self.quad.incident(&flags[i].p, &flags[j].l)?;
                r.point_line.record(inc == (points[i] == points[j]), || {
                    format!("x_p = {} vs y_l = {}", points[i], points[j])
                });
            }
        }

        for (a, im) in images.iter().enumerate() {
            let gi = points.iter().position(|x| *x == im.block.gnarl);
            for x in [gi, Some(a % n), Some((a * 13 + 5) % n)]
                .into_iter()
                .flatten()
            {
                let f = &flags[x];
                let want = points[x] == im.block.gnarl;
                let got_pl = self.quad.incident(&f.p, &im.line)?;
                let got_lp = self.quad.incident(&im.point, &f.l)?;
                r.gnarl_rule.record(got_pl == want && got_lp == want, || {
                    format!(
                        "x = {} and sphere {}: {got_pl} {got_lp}",
                        points[x], im.block
                    )
                });
            }
        }

        for (a, ia) in images.iter().enumerate() {
            for b in [a ^ 1, (a + 3) % images.len()] {
                let Some(ib) = images.get(b) else { continue };
                if a == b {
                    continue;
                }
                let (ba, bb) = (&ia.block, &ib.block);
                let want = ba.gnarl != bb.gnarl
                    && self.contains(bb, &ba.gnarl)?
                    && self.contains(ba, &bb.gnarl)?;
                let got = self.quad.incident(&ia.point, &ib.line)?;
                r.sphere_sphere_incident += want as usize;
                r.sphere_sphere
                    .record(got == want, || format!("A = {ba}, B = {bb}: {got}"));
            }
        }

        let mut seen_p = HashSet::new();
        let mut seen_l = HashSet::new();
        for f in &flags {
            let fresh = seen_p.insert(f.p.clone()) & seen_l.insert(f.l.clone());
            r.injective.record(fresh, || format!("repeated flag {f}"));
        }
        for im in &images {
            let fresh = seen_p.insert(im.point.clone()) & seen_l.insert(im.line.clone());
            r.injective
                .record(fresh, || format!("repeated image of {}", im.block));
        }

        for f in &flags {
            r.polarity_swap
                .record(self.quad.polarity_point(&f.p)? == f.l, || format!("{f}"));
        }
        for im in &images {
            let ok = self.quad.polarity_point(&im.point)? == im.line;
            r.polarity_swap
                .record(ok, || format!("rho(B_p) != B_l for {}", im.block));
        }
        Ok(r)
    }

    /// Points and spheres for [`MoufangSet::reconstruct`]: spheres with
    /// gnarl `inf`, spheres through `inf`, and Suzuki-Tits spheres, in
    /// pairs whose gnarls lie in each other.
    pub fn reconstruction_sample(
        &self,
        s: &mut Sampler,
        pairs: usize,
    ) -> Result<(Vec<MoufangPoint>, Vec<Block>)> {
        let inst = self.rel().inst.clone();
        let mut points = vec![MoufangPoint::Inf];
        let mut spheres = Vec::new();
        for i in 0..pairs {
            let (g, h) = if i % 4 == 3 {
                let g = MoufangPoint::Label(s.r1_suzuki(), s.r2_suzuki());
                (g, MoufangPoint::Label(s.r1_suzuki(), s.r2_suzuki()))
            } else {
                (MoufangPoint::Label(s.r1(&inst), s.r2()), MoufangPoint::Inf)
            };
            if g == h {
                continue;
            }
            for x in [&g, &h] {
                if !points.contains(x) {
                    points.push(x.clone());
                }
            }
            spheres.push(Block::sphere(g.clone(), h.clone())?);
            spheres.push(Block::sphere(h, g)?);
        }
        while points.len() < spheres.len() {
            points.push(MoufangPoint::Label(s.r1(&inst), s.r2()));
        }
        Ok((points, spheres))
    }
}
