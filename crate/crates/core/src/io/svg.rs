//! SVG rendering of packings.

use std::fmt::Write;

use crate::geometry::{Orientation, Packing};
use crate::scalar::Scalar;

const FILLS: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

fn num(s: &Scalar) -> String {
    fmt_f64(s.to_f64())
}

fn fmt_f64(v: f64) -> String {
    let text = format!("{v:.6}");
    let text = text.trim_end_matches('0').trim_end_matches('.');
    if text == "-0" {
        "0".to_string()
    } else {
        text.to_string()
    }
}

/// Container outline plus one labelled box per placed rectangle. The
/// viewBox is the container, with the y axis flipped so the origin sits at
/// the bottom left.
pub fn render_svg(p: &Packing) -> String {
    let (w, h) = (p.container().w(), p.container().h());
    let (wf, hf) = (w.to_f64(), h.to_f64());
    let stroke = fmt_f64(wf.max(hf) / 200.0);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        num(w),
        num(h),
        fmt_f64(400.0 * wf / wf.max(hf)),
        fmt_f64(400.0 * hf / wf.max(hf)),
    );
    let _ = writeln!(
        out,
        r#"  <rect class="container" x="0" y="0" width="{}" height="{}" fill="white" stroke="black" stroke-width="{stroke}"/>"#,
        num(w),
        num(h),
    );
    for r in p.rects() {
        let top_in_svg = h - r.top();
        let (rw, rh) = (r.width(), r.height());
        let fill = FILLS[(r.id().0 - 1) % FILLS.len()];
        let rot = match r.orientation() {
            Orientation::Horizontal => "h",
            Orientation::Vertical => "v",
        };
        let _ = writeln!(
            out,
            r#"  <g class="rect" data-id="{}" data-orientation="{rot}">"#,
            r.id()
        );
        let _ = writeln!(
            out,
            r#"    <rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" stroke="black" stroke-width="{stroke}"/>"#,
            num(r.left()),
            num(&top_in_svg),
            num(&rw),
            num(&rh),
        );
        let cx = r.left().to_f64() + rw.to_f64() / 2.0;
        let cy = top_in_svg.to_f64() + rh.to_f64() / 2.0;
        let font = rw.to_f64().min(rh.to_f64()) * 0.4;
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="central">{}</text>"#,
            fmt_f64(cx),
            fmt_f64(cy),
            fmt_f64(font),
            r.id(),
        );
        let _ = writeln!(out, "  </g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}
