//! Static SVG figures: the shortest path tree drawn over the point set,
//! with the union of radius-r disks around each hop level shaded so the
//! wavefront of the search is visible. Grouping each level's disks under
//! one `opacity` attribute makes overlapping disks render as a flat
//! union instead of darkening where they intersect.

use crate::formats::{Mode, TreeDoc};
use std::fmt::Write as _;
use udg::PointSet;

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;

struct Frame {
    scale: f64,
    min_x: f64,
    max_y: f64,
    height: f64,
}

impl Frame {
    fn fit(ps: &PointSet, radius: f64) -> Frame {
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for p in ps.iter() {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
        // leave room for the disks around boundary points
        min_x -= radius;
        max_x += radius;
        min_y -= radius;
        max_y += radius;
        let world_w = (max_x - min_x).max(1e-9);
        let world_h = (max_y - min_y).max(1e-9);
        let scale = (WIDTH - 2.0 * MARGIN) / world_w;
        Frame {
            scale,
            min_x,
            max_y,
            height: world_h * scale + 2.0 * MARGIN,
        }
    }

    fn x(&self, wx: f64) -> f64 {
        MARGIN + (wx - self.min_x) * self.scale
    }

    // y axis flips: world up is screen up
    fn y(&self, wy: f64) -> f64 {
        MARGIN + (self.max_y - wy) * self.scale
    }
}

pub fn render_tree_svg(ps: &PointSet, doc: &TreeDoc) -> String {
    let frame = Frame::fit(ps, doc.radius);
    let disk_px = doc.radius * frame.scale;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH:.2} {:.2}\">",
        frame.height
    );
    let _ = writeln!(
        out,
        "<rect width=\"{WIDTH:.2}\" height=\"{:.2}\" fill=\"white\"/>",
        frame.height
    );

    match doc.mode {
        Mode::Unweighted => {
            // one translucent union of disks per hop level; stacking makes
            // earlier waves darker, tracing the growth order
            let mut levels: Vec<Vec<usize>> = Vec::new();
            for (i, &d) in doc.dist.iter().enumerate() {
                if d.is_finite() {
                    let level = d as usize;
                    if levels.len() <= level {
                        levels.resize(level + 1, Vec::new());
                    }
                    levels[level].push(i);
                }
            }
            for members in &levels {
                let _ = writeln!(out, "<g opacity=\"0.10\" fill=\"#607080\">");
                for &i in members {
                    let p = ps.point(i);
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\"/>",
                        frame.x(p.x),
                        frame.y(p.y),
                        disk_px
                    );
                }
                let _ = writeln!(out, "</g>");
            }
        }
        Mode::Weighted => {
            // single union over every reached point: the covered region
            let _ = writeln!(out, "<g opacity=\"0.10\" fill=\"#607080\">");
            for (i, &d) in doc.dist.iter().enumerate() {
                if d.is_finite() {
                    let p = ps.point(i);
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\"/>",
                        frame.x(p.x),
                        frame.y(p.y),
                        disk_px
                    );
                }
            }
            let _ = writeln!(out, "</g>");
        }
    }

    let _ = writeln!(
        out,
        "<g stroke=\"#2a7fba\" stroke-width=\"1.4\" stroke-linecap=\"round\">"
    );
    for (i, &p) in doc.parent.iter().enumerate() {
        let Some(p) = p else { continue };
        let a = ps.point(i);
        let b = ps.point(p);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>",
            frame.x(a.x),
            frame.y(a.y),
            frame.x(b.x),
            frame.y(b.y)
        );
    }
    let _ = writeln!(out, "</g>");

    for (i, p) in ps.iter().enumerate() {
        let fill = if doc.dist[i].is_finite() {
            "#222222"
        } else {
            "#bbbbbb"
        };
        let _ = writeln!(
            out,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"{fill}\"/>",
            frame.x(p.x),
            frame.y(p.y)
        );
    }
    let s = ps.point(doc.source);
    let _ = writeln!(
        out,
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"#d33a3a\"/>",
        frame.x(s.x),
        frame.y(s.y)
    );
    let _ = writeln!(out, "</svg>");
    out
}
