//! Contour rendering for binary and ternary tables: an ASCII grid with a
//! level-set legend, or an SVG with lattice dots, per-level polylines, and
//! value labels. Output is byte-deterministic.

use std::collections::BTreeMap;

use chainops::properties::isolated_points;
use chainops::{Error, OpTable, Result};

/// Level sets keyed by value, points in tuple-code order.
fn level_sets(op: &OpTable) -> BTreeMap<u32, Vec<Vec<u32>>> {
    let mut levels: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    for (_, tuple, value) in op.cells() {
        levels.entry(value).or_default().push(tuple);
    }
    levels
}

fn fmt_point(point: &[u32]) -> String {
    let inner: Vec<String> = point.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn require_renderable(op: &OpTable) -> Result<()> {
    if !(2..=3).contains(&op.arity()) {
        return Err(Error::InvalidParameter(format!(
            "rendering supports arity 2 (grid) and 3 (slice grids), got {}",
            op.arity()
        )));
    }
    Ok(())
}

/// One k x k grid: the first argument runs bottom-to-top, the second left to
/// right. For ternary tables one grid is printed per value of the last
/// argument.
pub fn ascii(op: &OpTable) -> Result<String> {
    require_renderable(op)?;
    let k = op.chain().k();
    let width = k.to_string().len();
    let mut out = format!("k={} n={}\n", k, op.arity());
    let slices: Vec<Option<u32>> = if op.arity() == 2 {
        vec![None]
    } else {
        (1..=k).map(Some).collect()
    };
    for slice in slices {
        if let Some(c) = slice {
            out.push_str(&format!("x3={c}:\n"));
        }
        for row in (1..=k).rev() {
            out.push_str(&format!("{row:width$} |"));
            for col in 1..=k {
                let args: Vec<u32> = match slice {
                    None => vec![row, col],
                    Some(c) => vec![row, col, c],
                };
                out.push_str(&format!(" {:width$}", op.eval(&args)?));
            }
            out.push('\n');
        }
        out.push_str(&format!("{:width$} +", ""));
        out.push_str(&"-".repeat((width + 1) * k as usize));
        out.push('\n');
        out.push_str(&format!("{:width$}  ", ""));
        for col in 1..=k {
            out.push_str(&format!(" {col:width$}"));
        }
        out.push('\n');
    }
    let isolated = isolated_points(op);
    out.push_str("levels:\n");
    for (value, points) in level_sets(op) {
        let rendered: Vec<String> = points.iter().map(|p| fmt_point(p)).collect();
        out.push_str(&format!("  {value}: {}", rendered.join(" ")));
        if points.len() == 1 && isolated.contains(&points[0]) {
            out.push_str(" *");
        }
        out.push('\n');
    }
    if isolated.is_empty() {
        out.push_str("isolated: none\n");
    } else {
        let rendered: Vec<String> = isolated.iter().map(|p| fmt_point(p)).collect();
        out.push_str(&format!("isolated: {}\n", rendered.join(" ")));
    }
    Ok(out)
}

const CELL: i64 = 40;
const MARGIN: i64 = 40;

/// Lattice dots with one polyline per level set (points sorted
/// lexicographically and connected consecutively) and a value label at each
/// level's last point. Ternary tables render one panel per value of the
/// last argument.
pub fn svg(op: &OpTable) -> Result<String> {
    require_renderable(op)?;
    let k = op.chain().k() as i64;
    let panels: i64 = if op.arity() == 2 { 1 } else { k };
    let panel_width = (k - 1) * CELL + 2 * MARGIN;
    let width = panel_width * panels;
    let height = (k - 1) * CELL + 2 * MARGIN + 20;

    // lattice position of a point: first argument = y (upward), second = x,
    // third selects the panel
    let position = |point: &[u32]| -> (i64, i64) {
        let panel = if op.arity() == 2 {
            0
        } else {
            point[2] as i64 - 1
        };
        let x = panel * panel_width + MARGIN + (point[1] as i64 - 1) * CELL;
        let y = MARGIN + (k - point[0] as i64) * CELL;
        (x, y)
    };

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    for panel in 0..panels {
        if op.arity() == 3 {
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"14\">x3={}</text>\n",
                panel * panel_width + MARGIN,
                MARGIN / 2,
                panel + 1
            ));
        }
    }
    for (value, mut points) in level_sets(op) {
        points.sort();
        if op.arity() == 3 {
            // connect within panels only; keep panel order by sorting on the
            // last coordinate first
            points.sort_by_key(|p| (p[2], p[0], p[1]));
        }
        let coords: Vec<String> = points
            .iter()
            .map(|p| {
                let (x, y) = position(p);
                format!("{x},{y}")
            })
            .collect();
        if coords.len() > 1 {
            if op.arity() == 2 {
                out.push_str(&format!(
                    "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                    coords.join(" ")
                ));
            } else {
                for panel_points in points.chunk_by(|a, b| a[2] == b[2]) {
                    if panel_points.len() > 1 {
                        let coords: Vec<String> = panel_points
                            .iter()
                            .map(|p| {
                                let (x, y) = position(p);
                                format!("{x},{y}")
                            })
                            .collect();
                        out.push_str(&format!(
                            "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                            coords.join(" ")
                        ));
                    }
                }
            }
        }
        let last = points.last().expect("level sets are nonempty");
        let (x, y) = position(last);
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"14\">{value}</text>\n",
            x + 8,
            y - 8
        ));
    }
    for (_, tuple, _) in op.cells() {
        let (x, y) = position(&tuple);
        out.push_str(&format!("  <circle cx=\"{x}\" cy=\"{y}\" r=\"4\"/>\n"));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chainops::constructors::max_wrt;
    use chainops::{FiniteChain, LinearOrdering};

    fn fig1_left() -> OpTable {
        let chain = FiniteChain::new(4).unwrap();
        let ord = LinearOrdering::new(chain, vec![3, 2, 4, 1]).unwrap();
        max_wrt(&ord, 2).unwrap()
    }

    #[test]
    fn ascii_single_cell() {
        let op = OpTable::new(FiniteChain::new(1).unwrap(), 2, vec![1]).unwrap();
        let text = ascii(&op).unwrap();
        assert!(text.contains("1 | 1\n"));
        assert!(text.contains("isolated: (1,1)"));
    }

    #[test]
    fn ascii_marks_the_isolated_level() {
        let text = ascii(&fig1_left()).unwrap();
        assert!(text.contains("3: (3,3) *"), "{text}");
        assert!(text.contains("isolated: (3,3)"));
        // top row is the first argument at its maximum
        assert!(text.contains("4 | 1 4 4 4\n"), "{text}");
        assert!(text.contains("1 | 1 1 1 1\n"), "{text}");
    }

    #[test]
    fn ascii_rejects_unsupported_arity() {
        let op = OpTable::new(FiniteChain::new(2).unwrap(), 1, vec![1, 2]).unwrap();
        assert!(matches!(ascii(&op), Err(Error::InvalidParameter(_))));
        let op4 = OpTable::from_fn(FiniteChain::new(2).unwrap(), 4, |t| t[0]).unwrap();
        assert!(matches!(ascii(&op4), Err(Error::InvalidParameter(_))));
        assert!(matches!(svg(&op4), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn renders_are_deterministic() {
        assert_eq!(ascii(&fig1_left()).unwrap(), ascii(&fig1_left()).unwrap());
        assert_eq!(svg(&fig1_left()).unwrap(), svg(&fig1_left()).unwrap());
    }

    #[test]
    fn svg_has_dots_polylines_and_labels() {
        let text = svg(&fig1_left()).unwrap();
        assert_eq!(text.matches("<circle").count(), 16);
        assert!(text.matches("<polyline").count() >= 3);
        assert!(text.contains("<text"));
        assert!(text.starts_with("<svg"));
        assert!(text.ends_with("</svg>\n"));
    }

    #[test]
    fn ternary_render_has_k_slices() {
        let chain = FiniteChain::new(2).unwrap();
        let op = OpTable::from_fn(chain, 3, |t| *t.iter().max().unwrap()).unwrap();
        let text = ascii(&op).unwrap();
        assert!(text.contains("x3=1:"));
        assert!(text.contains("x3=2:"));
        let drawing = svg(&op).unwrap();
        assert_eq!(drawing.matches("<circle").count(), 8);
    }
}
