//! ASCII and SVG pictures of a path in its grid, with optional fillings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounce::initial_bounce;
use crate::core_partition::row_length_filling;
use crate::error::{Error, Result};
use crate::path::{hook_value, DyckPath};
use crate::zeta::{interval_grid, laser_filling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overlay {
    Hooks,
    RowLengths,
    Lasers,
    Levels,
    Bounce,
    Intervals,
}

impl Overlay {
    pub fn name(self) -> &'static str {
        match self {
            Overlay::Hooks => "hooks",
            Overlay::RowLengths => "row-lengths",
            Overlay::Lasers => "lasers",
            Overlay::Levels => "levels",
            Overlay::Bounce => "bounce",
            Overlay::Intervals => "intervals",
        }
    }
}

impl FromStr for Overlay {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "hooks" => Ok(Overlay::Hooks),
            "row-lengths" => Ok(Overlay::RowLengths),
            "lasers" => Ok(Overlay::Lasers),
            "levels" => Ok(Overlay::Levels),
            "bounce" => Ok(Overlay::Bounce),
            "intervals" => Ok(Overlay::Intervals),
            other => Err(Error::UnsupportedOverlay(other.to_string())),
        }
    }
}

/// Parses a comma-separated overlay list; the empty string means none.
pub fn parse_overlays(list: &str) -> Result<Vec<Overlay>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// A numeric value per box, `None` for blank boxes; `grid[row][col]`.
type BoxValues = Vec<Vec<Option<i64>>>;

fn numeric_overlay(p: &DyckPath, overlay: Overlay) -> Option<BoxValues> {
    let (a, b) = (p.a(), p.b());
    let under = |col: usize, row: usize| row < p.column_heights()[col] && hook_value(a, b, col, row) > 0;
    let grid = match overlay {
        Overlay::Hooks => (0..a)
            .map(|r| (0..b).map(|c| Some(hook_value(a, b, c, r))).collect())
            .collect(),
        Overlay::RowLengths => {
            let f = row_length_filling(p);
            (0..a)
                .map(|r| (0..b).map(|c| under(c, r).then(|| f.get(c, r) as i64)).collect())
                .collect()
        }
        Overlay::Lasers => {
            let f = laser_filling(p);
            (0..a)
                .map(|r| (0..b).map(|c| under(c, r).then(|| f.get(c, r) as i64)).collect())
                .collect()
        }
        _ => return None,
    };
    Some(grid)
}

fn base_symbol(p: &DyckPath, col: usize, row: usize) -> char {
    if row >= p.column_heights()[col] {
        '#'
    } else if hook_value(p.a(), p.b(), col, row) > 0 {
        '.'
    } else {
        ' '
    }
}

fn ascii_grid(p: &DyckPath, cell: impl Fn(usize, usize) -> String, width: usize) -> String {
    let mut out = String::new();
    let border = format!("+{}+\n", "-".repeat(p.b() * width));
    out.push_str(&border);
    for row in (0..p.a()).rev() {
        out.push('|');
        for col in 0..p.b() {
            let _ = write!(out, "{:>width$}", cell(col, row));
        }
        out.push_str("|\n");
    }
    out.push_str(&border);
    out
}

fn bounce_check(p: &DyckPath) -> Result<crate::bounce::BouncePath> {
    initial_bounce(p).map_err(|_| {
        Error::UnsupportedOverlay(format!("bounce needs b = ak + r with 0 < r < a, got ({},{})", p.a(), p.b()))
    })
}

/// Text picture: `#` above the path, `.` between the path and the diagonal.
pub fn render_ascii(p: &DyckPath, overlays: &[Overlay]) -> Result<String> {
    let mut out = format!("({},{}) {}\n", p.a(), p.b(), p);
    out.push_str(&ascii_grid(p, |c, r| base_symbol(p, c, r).to_string(), 1));
    for &ov in overlays {
        let _ = writeln!(out, "{}:", ov.name());
        match ov {
            Overlay::Hooks | Overlay::RowLengths | Overlay::Lasers => {
                let grid = numeric_overlay(p, ov).expect("numeric overlay");
                let width = grid
                    .iter()
                    .flatten()
                    .flatten()
                    .map(|v| v.to_string().len())
                    .max()
                    .unwrap_or(1)
                    + 1;
                out.push_str(&ascii_grid(
                    p,
                    |c, r| match grid[r][c] {
                        Some(v) => v.to_string(),
                        None => base_symbol(p, c, r).to_string(),
                    },
                    width,
                ));
            }
            Overlay::Levels => {
                let levels: Vec<String> = p.levels().iter().map(i64::to_string).collect();
                let _ = writeln!(out, "{}", levels.join(" "));
            }
            Overlay::Intervals => {
                let g = interval_grid(p);
                out.push_str(&ascii_grid(p, |c, r| if g.is_shaded(c, r) { "*".into() } else { base_symbol(p, c, r).to_string() }, 1));
                let show = |v: &[(i64, i64)]| v.iter().map(|(x, y)| format!("[{x},{y}]")).collect::<Vec<_>>().join(" ");
                let _ = writeln!(out, "rows: {}", show(g.row_intervals()));
                let _ = writeln!(out, "columns: {}", show(g.column_intervals()));
            }
            Overlay::Bounce => {
                let bp = bounce_check(p)?;
                let _ = writeln!(
                    out,
                    "v={:?} h={:?} window={}..={}",
                    bp.v,
                    bp.h,
                    bp.delta_lower(),
                    bp.delta_upper()
                );
            }
        }
    }
    Ok(out)
}

const UNIT: usize = 40;

/// SVG picture with a `40b x 40a` view box.
pub fn render_svg(p: &DyckPath, overlays: &[Overlay]) -> Result<String> {
    let (a, b) = (p.a(), p.b());
    let (w, h) = (UNIT * b, UNIT * a);
    let px = |x: usize| x * UNIT;
    let py = |y: usize| (a - y) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#
    );
    for col in 0..b {
        for row in 0..a {
            let fill = match base_symbol(p, col, row) {
                '#' => "#dddddd",
                '.' => "#ffffff",
                _ => "#f4f4f4",
            };
            let _ = writeln!(
                s,
                r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#999999" stroke-width="1"/>"##,
                px(col),
                py(row + 1)
            );
        }
    }
    if overlays.contains(&Overlay::Intervals) {
        let g = interval_grid(p);
        for col in 0..b {
            for row in 0..a {
                if g.is_shaded(col, row) {
                    let _ = writeln!(
                        s,
                        r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="#8fb8de" fill-opacity="0.6"/>"##,
                        px(col),
                        py(row + 1)
                    );
                }
            }
        }
    }
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{h}" x2="{w}" y2="0" stroke="#cc3333" stroke-width="1.5"/>"##
    );
    let points: Vec<String> = p.points().iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    let _ = writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#000000" stroke-width="3"/>"##,
        points.join(" ")
    );
    for &ov in overlays {
        match ov {
            Overlay::Hooks | Overlay::RowLengths | Overlay::Lasers => {
                let grid = numeric_overlay(p, ov).expect("numeric overlay");
                for (row, line) in grid.iter().enumerate() {
                    for (col, v) in line.iter().enumerate() {
                        if let Some(v) = v {
                            let _ = writeln!(
                                s,
                                r#"<text x="{}" y="{}" font-size="14" text-anchor="middle" dominant-baseline="central" class="{}">{v}</text>"#,
                                px(col) + UNIT / 2,
                                py(row + 1) + UNIT / 2,
                                ov.name()
                            );
                        }
                    }
                }
            }
            Overlay::Levels => {
                for ((x, y), l) in p.points().into_iter().zip(p.levels()) {
                    let _ = writeln!(
                        s,
                        r##"<text x="{}" y="{}" font-size="11" fill="#1f4e9c" class="levels">{l}</text>"##,
                        px(x) + 3,
                        (py(y) + 12).min(h - 2)
                    );
                }
            }
            Overlay::Bounce => {
                let bp = bounce_check(p)?;
                let pts: Vec<String> = bp.corners().iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
                let _ = writeln!(
                    s,
                    r##"<polyline points="{}" fill="none" stroke="#2a9d4b" stroke-width="2" stroke-dasharray="6,4" class="bounce"/>"##,
                    pts.join(" ")
                );
            }
            Overlay::Intervals => {}
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
