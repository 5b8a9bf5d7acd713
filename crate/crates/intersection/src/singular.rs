use crate::IntersectionError;
use surface_model::TranslationSurface;
use trajectory::SaddleConnection;

/// Passage of a closed curve through a cone point, as a chord of the
/// link circle: the angular positions of the incoming and outgoing
/// germs.
#[derive(Clone, Copy, Debug)]
pub struct LinkChord {
    pub class: usize,
    pub angle_in: f64,
    pub angle_out: f64,
}

/// Chords cut on the link circles by a closed curve given as a cyclic
/// sequence of saddle connections: one passage per junction between
/// consecutive connections.
pub fn curve_chords(
    s: &TranslationSurface,
    curve: &[SaddleConnection],
) -> Result<Vec<LinkChord>, IntersectionError> {
    if curve.is_empty() {
        return Err(IntersectionError::EmptyCurve);
    }
    let k = curve.len();
    let mut chords = Vec::with_capacity(k);
    for i in 0..k {
        let here = &curve[i];
        let next = &curve[(i + 1) % k];
        if here.end_class != next.start_class {
            return Err(IntersectionError::ClassMismatch);
        }
        let dir_in = -(here.holonomy.normalized());
        let dir_out = next.holonomy.normalized();
        let (class_in, angle_in) = s.germ_angle(here.end, dir_in);
        let (class_out, angle_out) = s.germ_angle(next.start, dir_out);
        debug_assert_eq!(class_in, class_out);
        chords.push(LinkChord {
            class: class_in,
            angle_in,
            angle_out,
        });
    }
    Ok(chords)
}

/// Whether `x` lies on the counterclockwise arc from `from` to `to` on
/// a circle of circumference `total`.
fn in_arc(x: f64, from: f64, to: f64, total: f64) -> bool {
    let wrap = |v: f64| v.rem_euclid(total);
    wrap(x - from) < wrap(to - from)
}

/// Contribution of one pair of passages: `+1` or `-1` when the chords
/// interleave on the link circle, `0` otherwise. The sign is `+1` when
/// the second curve leaves through the counterclockwise arc from the
/// first curve's outgoing germ to its incoming germ.
fn chord_pair(a: &LinkChord, b: &LinkChord, total: f64) -> i64 {
    // a later-registered curve sharing a germ with an earlier one is
    // nudged counterclockwise, so coinciding germs do not collide
    let eps = 1e-7;
    let (b_in, b_out) = (b.angle_in + eps, b.angle_out + eps);
    let out_inside = in_arc(b_out, a.angle_out, a.angle_in, total);
    let in_inside = in_arc(b_in, a.angle_out, a.angle_in, total);
    if out_inside == in_inside {
        0
    } else if out_inside {
        1
    } else {
        -1
    }
}

/// Crossings of two closed curves at the cone points: `(count, signed)`
/// over all pairs of passages through a common singularity whose link
/// chords interleave. A lone saddle connection with distinct endpoint
/// classes has no passages and contributes nothing.
pub fn singular_intersection(
    s: &TranslationSurface,
    g: &[SaddleConnection],
    d: &[SaddleConnection],
) -> Result<(usize, i64), IntersectionError> {
    // open (non-closed) single connections terminate at their endpoints
    // rather than passing through them
    let closed_cycle = |c: &[SaddleConnection]| {
        c.last().unwrap().end_class == c[0].start_class
            && c.windows(2).all(|w| w[0].end_class == w[1].start_class)
    };
    if g.is_empty() || d.is_empty() {
        return Err(IntersectionError::EmptyCurve);
    }
    if !closed_cycle(g) || !closed_cycle(d) {
        return Ok((0, 0));
    }
    if g.len() == 1 && d.len() == 1 && trajectory::same_geodesic(s, &g[0], &d[0]) {
        return Ok((0, 0));
    }
    let ga = curve_chords(s, g)?;
    let db = curve_chords(s, d)?;
    let mut count = 0;
    let mut signed = 0;
    for a in &ga {
        for b in &db {
            if a.class != b.class {
                continue;
            }
            let total = s.cone_angles()[a.class];
            let c = chord_pair(a, b, total);
            if c != 0 {
                count += 1;
                signed += c;
            }
        }
    }
    Ok((count, signed))
}
