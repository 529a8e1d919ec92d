use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::perm::Perm;

pub const MAX_RENDER_N: usize = 26;

/// Chords of the circular representation, each `(k, l)` with `k < l` in `D`,
/// relabelled through `sigma` when given.
pub fn labelled_chords(p: &DyckPath, sigma: Option<&Perm>) -> Result<Vec<(usize, usize)>> {
    if let Some(s) = sigma {
        if s.len() != p.len() {
            return Err(Error::SizeMismatch {
                perm: s.len(),
                path: p.len(),
            });
        }
    }
    let label = |k: usize| sigma.map_or(k, |s| s.at(k));
    Ok(p.tunneling()
        .chords()
        .into_iter()
        .map(|(k, l)| (label(k), label(l)))
        .collect())
}

pub fn chord_list(chords: &[(usize, usize)]) -> String {
    chords
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Text chord diagram: vertex labels clockwise, then an arc diagram over the
/// steps, then the chord pairs.
pub fn render_chords(p: &DyckPath, sigma: Option<&Perm>) -> Result<String> {
    let n = p.n();
    if n > MAX_RENDER_N {
        return Err(Error::TooLarge { n, max: MAX_RENDER_N });
    }
    let m = p.len();
    let chords = labelled_chords(p, sigma)?;
    let labels: Vec<String> = (1..=m).map(|k| sigma.map_or(k, |s| s.at(k)).to_string()).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1) + 1;

    let mut out = String::new();
    out.push_str(&format!("circle (clockwise): {}\n", labels.join(" ")));

    // One row per nesting depth, deepest arcs at the bottom.
    let t = p.tunneling();
    let heights = p.heights();
    let depth = p.peak_height();
    for level in 1..=depth {
        let mut row = vec![' '; m * width];
        for (k, l) in t.chords() {
            if heights[k] != level {
                continue;
            }
            let (x0, x1) = ((k - 1) * width + width - 1, (l - 1) * width + width - 1);
            row[x0] = '+';
            row[x1] = '+';
            row[x0 + 1..x1].iter_mut().for_each(|c| *c = '-');
        }
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let axis: String = labels.iter().map(|l| format!("{l:>width$}")).collect();
    out.push_str(&axis);
    out.push('\n');
    out.push_str(&format!("chords: {}\n", chord_list(&chords)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    #[test]
    fn chord_examples() {
        assert_eq!(
            chord_list(&labelled_chords(&p("uuduuddd"), None).unwrap()),
            "(1,8),(2,3),(4,7),(5,6)"
        );
        assert_eq!(chord_list(&labelled_chords(&p("ud"), None).unwrap()), "(1,2)");
        let s = Perm::parse("362154").unwrap();
        assert_eq!(
            chord_list(&labelled_chords(&p("uududd"), Some(&s)).unwrap()),
            "(3,4),(6,2),(1,5)"
        );
    }

    #[test]
    fn diagram_is_deterministic() {
        let text = render_chords(&p("uuduuddd"), None).unwrap();
        assert_eq!(text, render_chords(&p("uuduuddd"), None).unwrap());
        assert!(text.starts_with("circle (clockwise): 1 2 3 4 5 6 7 8\n"));
        assert!(text.ends_with("chords: (1,8),(2,3),(4,7),(5,6)\n"));
        assert_eq!(text.lines().count(), 1 + 3 + 1 + 1);
    }

    #[test]
    fn too_large() {
        let big = DyckPath::zigzag(27);
        assert!(matches!(render_chords(&big, None), Err(Error::TooLarge { n: 27, .. })));
        assert!(render_chords(&DyckPath::zigzag(26), None).is_ok());
    }
}
