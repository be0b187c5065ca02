//! The Klein four group generated by the two midline reflections of `S`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{LatticePoint, LatticeRect};

/// The four symmetries of the rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymmetryMap {
    #[serde(rename = "identity")]
    Identity,
    /// `(x, y) ↦ (x, (q+1)/2 - y)`, reflection in the horizontal midline.
    #[serde(rename = "H")]
    Horizontal,
    /// `(x, y) ↦ ((p+1)/2 - x, y)`, reflection in the vertical midline.
    #[serde(rename = "V")]
    Vertical,
    /// `(x, y) ↦ ((p+1)/2 - x, (q+1)/2 - y)`, the point reflection.
    #[serde(rename = "C")]
    Central,
}

impl SymmetryMap {
    pub const ALL: [SymmetryMap; 4] = [
        SymmetryMap::Identity,
        SymmetryMap::Horizontal,
        SymmetryMap::Vertical,
        SymmetryMap::Central,
    ];

    fn bits(self) -> u8 {
        match self {
            SymmetryMap::Identity => 0b00,
            SymmetryMap::Horizontal => 0b01,
            SymmetryMap::Vertical => 0b10,
            SymmetryMap::Central => 0b11,
        }
    }

    fn from_bits(b: u8) -> SymmetryMap {
        match b & 0b11 {
            0b00 => SymmetryMap::Identity,
            0b01 => SymmetryMap::Horizontal,
            0b10 => SymmetryMap::Vertical,
            _ => SymmetryMap::Central,
        }
    }

    /// Group product `self ∘ other`, i.e. XOR in `(Z/2Z)^2`.
    pub fn compose(self, other: SymmetryMap) -> SymmetryMap {
        SymmetryMap::from_bits(self.bits() ^ other.bits())
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SymmetryMap::Identity => "identity",
            SymmetryMap::Horizontal => "H",
            SymmetryMap::Vertical => "V",
            SymmetryMap::Central => "C",
        }
    }

    fn map_coords(self, rect: &LatticeRect, x: u64, y: u64) -> (u64, u64) {
        let flip_x = |x| rect.width + 1 - x;
        let flip_y = |y| rect.height + 1 - y;
        match self {
            SymmetryMap::Identity => (x, y),
            SymmetryMap::Horizontal => (x, flip_y(y)),
            SymmetryMap::Vertical => (flip_x(x), y),
            SymmetryMap::Central => (flip_x(x), flip_y(y)),
        }
    }
}

impl fmt::Display for SymmetryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SymmetryMap {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<SymmetryMap, String> {
        match s {
            "identity" | "I" | "e" => Ok(SymmetryMap::Identity),
            "H" | "h" => Ok(SymmetryMap::Horizontal),
            "V" | "v" => Ok(SymmetryMap::Vertical),
            "C" | "c" => Ok(SymmetryMap::Central),
            other => Err(format!("unknown symmetry '{other}'")),
        }
    }
}

/// Image of `pt` under `map`. Fails if `pt` is not a point of `rect`.
pub fn apply(map: SymmetryMap, pt: &LatticePoint, rect: &LatticeRect) -> Result<LatticePoint> {
    // re-derive through the rect so a stale side_value cannot leak through
    let pt = rect.point(pt.x, pt.y)?;
    let (x, y) = map.map_coords(rect, pt.x, pt.y);
    rect.point(x, y)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointReport {
    pub map_kind: SymmetryMap,
    pub fixed: Vec<LatticePoint>,
}

pub fn fixed_points(map: SymmetryMap, rect: &LatticeRect, cap: u64) -> Result<FixedPointReport> {
    let fixed = rect
        .enumerate_points(cap)?
        .filter(|pt| map.map_coords(rect, pt.x, pt.y) == pt.coords())
        .collect();
    Ok(FixedPointReport {
        map_kind: map,
        fixed,
    })
}

/// One orbit of `⟨H, V⟩`, points sorted ascending; the first point is the
/// orbit's key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Orbit {
    pub points: Vec<LatticePoint>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn key(&self) -> &LatticePoint {
        &self.points[0]
    }
}

/// Decomposes `S` into orbits, ordered by their least point.
pub fn orbits(rect: &LatticeRect, cap: u64) -> Result<Vec<Orbit>> {
    let mut out = Vec::new();
    for pt in rect.enumerate_points(cap)? {
        let mut points: Vec<LatticePoint> = SymmetryMap::ALL
            .iter()
            .map(|m| apply(*m, &pt, rect))
            .collect::<Result<_>>()?;
        points.sort();
        points.dedup();
        // row-major enumeration visits the least point of each orbit first
        if points[0] == pt {
            out.push(Orbit { points });
        }
    }
    Ok(out)
}

/// Orbit-size histogram: size -> number of orbits.
pub fn orbit_size_counts(orbits: &[Orbit]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for o in orbits {
        *counts.entry(o.size()).or_insert(0) += 1;
    }
    counts
}

/// Two points exchanged by the central symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralPair {
    pub first: LatticePoint,
    pub second: LatticePoint,
}

impl CentralPair {
    pub fn same_side(&self) -> bool {
        (self.first.side_value > 0) == (self.second.side_value > 0)
    }
}

/// Pairs `{pt, C(pt)}` with `pt ≠ C(pt)` lying on the same side of
/// `q·x = p·y`. Each pair appears once, lesser point first.
pub fn side_flip_violations(rect: &LatticeRect, cap: u64) -> Result<Vec<CentralPair>> {
    let mut out = Vec::new();
    for pt in rect.enumerate_points(cap)? {
        let image = apply(SymmetryMap::Central, &pt, rect)?;
        if pt < image {
            let pair = CentralPair {
                first: pt,
                second: image,
            };
            if pair.same_side() {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{odd_primes_below, PrimePair};
    use crate::lattice::DEFAULT_ENUMERATION_CAP as CAP;

    fn rect(p: u64, q: u64) -> LatticeRect {
        LatticeRect::from_u64(p, q).unwrap()
    }

    fn all_rects(bound: u64) -> Vec<LatticeRect> {
        let primes = odd_primes_below(bound);
        let mut v = Vec::new();
        for &p in &primes {
            for &q in &primes {
                if let Ok(pair) = PrimePair::new(p, q) {
                    v.push(LatticeRect::new(pair));
                }
            }
        }
        v
    }

    fn coords(pts: &[LatticePoint]) -> Vec<(u64, u64)> {
        pts.iter().map(LatticePoint::coords).collect()
    }

    #[test]
    fn group_table() {
        use SymmetryMap::*;
        for m in SymmetryMap::ALL {
            assert_eq!(m.compose(m), Identity);
            assert_eq!(m.compose(Identity), m);
        }
        assert_eq!(Horizontal.compose(Vertical), Central);
        assert_eq!(Vertical.compose(Horizontal), Central);
        assert_eq!(Central.compose(Horizontal), Vertical);
    }

    #[test]
    fn apply_examples() {
        let r = rect(3, 5);
        let p11 = r.point(1, 1).unwrap();
        assert_eq!(
            apply(SymmetryMap::Central, &p11, &r).unwrap().coords(),
            (1, 2)
        );
        assert_eq!(
            apply(SymmetryMap::Vertical, &p11, &r).unwrap().coords(),
            (1, 1)
        );
        let r = rect(5, 13);
        let p12 = r.point(1, 2).unwrap();
        assert_eq!(
            apply(SymmetryMap::Central, &p12, &r).unwrap().coords(),
            (2, 5)
        );
        let outside = LatticePoint {
            x: 3,
            y: 1,
            side_value: 0,
        };
        assert!(apply(SymmetryMap::Central, &outside, &r).is_err());
    }

    #[test]
    fn action_laws() {
        for r in all_rects(100) {
            for pt in r.enumerate_points(CAP).unwrap() {
                for m in SymmetryMap::ALL {
                    let img = apply(m, &pt, &r).unwrap();
                    assert!(r.contains(img.x, img.y));
                    assert_eq!(apply(m, &img, &r).unwrap(), pt);
                    for n in SymmetryMap::ALL {
                        let two = apply(m, &apply(n, &pt, &r).unwrap(), &r).unwrap();
                        assert_eq!(two, apply(m.compose(n), &pt, &r).unwrap());
                    }
                }
                let c = apply(SymmetryMap::Central, &pt, &r).unwrap();
                let (p, q) = (r.p() as i64, r.q() as i64);
                assert_eq!(2 * (pt.side_value + c.side_value), q - p);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let f = fixed_points(SymmetryMap::Central, &rect(3, 7), CAP).unwrap();
        assert_eq!(coords(&f.fixed), vec![(1, 2)]);
        assert!(fixed_points(SymmetryMap::Central, &rect(5, 13), CAP)
            .unwrap()
            .fixed
            .is_empty());
        assert!(fixed_points(SymmetryMap::Central, &rect(3, 5), CAP)
            .unwrap()
            .fixed
            .is_empty());
        let v = fixed_points(SymmetryMap::Vertical, &rect(3, 5), CAP).unwrap();
        assert_eq!(coords(&v.fixed), vec![(1, 1), (1, 2)]);
        assert!(fixed_points(SymmetryMap::Central, &rect(5, 13), 3).is_err());
    }

    #[test]
    fn central_fixed_point_characterization() {
        for r in all_rects(100) {
            let f = fixed_points(SymmetryMap::Central, &r, CAP).unwrap();
            if r.p() % 4 == 3 && r.q() % 4 == 3 {
                assert_eq!(coords(&f.fixed), vec![((r.p() + 1) / 4, (r.q() + 1) / 4)]);
                assert_eq!(r.total() % 2, 1);
            } else {
                assert!(f.fixed.is_empty());
                assert_eq!(r.total() % 2, 0);
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let o = orbits(&rect(5, 13), CAP).unwrap();
        assert_eq!(o.len(), 3);
        assert!(o.iter().all(|o| o.size() == 4));
        let o = orbits(&rect(3, 7), CAP).unwrap();
        assert_eq!(o.iter().map(Orbit::size).collect::<Vec<_>>(), vec![2, 1]);
        assert_eq!(coords(&o[0].points), vec![(1, 1), (1, 3)]);
        assert_eq!(coords(&o[1].points), vec![(1, 2)]);
        let o = orbits(&rect(3, 5), CAP).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(coords(&o[0].points), vec![(1, 1), (1, 2)]);
    }

    #[test]
    fn orbits_partition_the_rectangle() {
        for r in all_rects(60) {
            let os = orbits(&r, CAP).unwrap();
            let mut seen: Vec<LatticePoint> = os.iter().flat_map(|o| o.points.clone()).collect();
            assert_eq!(seen.len() as u64, r.total());
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u64, r.total());
            for o in &os {
                assert!(matches!(o.size(), 1 | 2 | 4));
                for pt in &o.points {
                    for m in SymmetryMap::ALL {
                        assert!(o.points.contains(&apply(m, pt, &r).unwrap()));
                    }
                }
            }
            let keys: Vec<_> = os.iter().map(|o| *o.key()).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
        }
    }

    #[test]
    fn side_flip_examples() {
        assert!(side_flip_violations(&rect(3, 5), CAP).unwrap().is_empty());
        assert!(side_flip_violations(&rect(7, 5), CAP).unwrap().is_empty());
        let v = side_flip_violations(&rect(5, 13), CAP).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(
            (v[0].first.coords(), v[0].second.coords()),
            ((1, 2), (2, 5))
        );
        assert_eq!((v[0].first.side_value, v[0].second.side_value), (3, 1));
    }

    #[test]
    fn side_flip_matches_brute_force_pairing() {
        for r in all_rects(40) {
            let pts: Vec<_> = r.enumerate_points(CAP).unwrap().collect();
            let mut expected = Vec::new();
            for a in &pts {
                for b in &pts {
                    let is_image = a.x + b.x == r.width + 1 && a.y + b.y == r.height + 1;
                    if a < b && is_image && (a.side_value > 0) == (b.side_value > 0) {
                        expected.push((a.coords(), b.coords()));
                    }
                }
            }
            let got: Vec<_> = side_flip_violations(&r, CAP)
                .unwrap()
                .iter()
                .map(|c| (c.first.coords(), c.second.coords()))
                .collect();
            assert_eq!(got, expected, "rect {:?}", r.pair);
        }
    }
}
