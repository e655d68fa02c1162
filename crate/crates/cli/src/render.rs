//! Plain-text helpers shared by the subcommands.

use toric_ech::{ConvexLoop, MomentRegion, Point, Polygon, Rational};

/// Left-aligned columns separated by two spaces, with no trailing whitespace.
pub fn table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Decimal rendering for approximation columns only.
pub fn approx(r: &Rational) -> String {
    format!("{:.6}", r.to_f64())
}

pub fn vertices(region: &MomentRegion) -> String {
    points(region.vertices())
}

pub fn points(pts: &[Point]) -> String {
    let parts: Vec<String> = pts.iter().map(Point::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Region outline and loops as whitespace-separated coordinates, one point per
/// line, each closed by repeating its first point.
pub fn plot_data(region: &MomentRegion, loops: &[(String, &ConvexLoop)]) -> String {
    let mut out = String::from("# region\n");
    let vs = region.vertices();
    for p in vs.iter().chain(vs.first()) {
        out.push_str(&format!("{} {}\n", p.rho1.to_f64(), p.rho2.to_f64()));
    }
    for (label, l) in loops {
        out.push_str(&format!("\n# {label}\n"));
        let vs = l.vertices();
        for [x, y] in vs.iter().chain(vs.first()) {
            out.push_str(&format!("{x} {y}\n"));
        }
    }
    out
}
