//! Text and SVG drawings of Young diagrams.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::diagram::{hook_grid, YoungDiagram};
use crate::error::{Error, Result};

pub const MIN_CELL_SIZE: u32 = 8;
pub const MAX_CELL_SIZE: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderFormat {
    #[default]
    Ascii,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: RenderFormat,
    pub show_hooks: bool,
    /// `(row, column)` boxes drawn distinctly.
    pub highlight: Vec<(usize, usize)>,
    /// SVG box side in pixels.
    pub cell_size: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: RenderFormat::Ascii,
            show_hooks: false,
            highlight: Vec::new(),
            cell_size: 32,
        }
    }
}

/// ASCII: one line per row, `[  ]` per box (`[ 10]` with hooks), highlighted
/// boxes as `<  >`. SVG: one `rect` per box with the hook length centred in it.
pub fn render(diagram: &YoungDiagram, options: &RenderOptions) -> Result<String> {
    if !(MIN_CELL_SIZE..=MAX_CELL_SIZE).contains(&options.cell_size) {
        return Err(Error::InvalidOptions(format!(
            "cell size {} is outside {MIN_CELL_SIZE}..={MAX_CELL_SIZE}",
            options.cell_size
        )));
    }
    if let Some(&(r, c)) = options
        .highlight
        .iter()
        .find(|&&(r, c)| !diagram.contains_box(r, c))
    {
        return Err(Error::InvalidHighlight(r, c));
    }
    let marked: HashSet<(usize, usize)> = options.highlight.iter().copied().collect();
    Ok(match options.format {
        RenderFormat::Ascii => ascii(diagram, options.show_hooks, &marked),
        RenderFormat::Svg => svg(diagram, options.show_hooks, &marked, options.cell_size),
    })
}

fn ascii(diagram: &YoungDiagram, show_hooks: bool, marked: &HashSet<(usize, usize)>) -> String {
    let hooks = hook_grid(diagram);
    let mut out = String::new();
    for (i, &len) in diagram.rows().iter().enumerate() {
        for j in 0..len as usize {
            let (open, close) = if marked.contains(&(i, j)) {
                ('<', '>')
            } else {
                ('[', ']')
            };
            if show_hooks {
                let h = hooks.get(i, j).expect("box in diagram");
                write!(out, "{open}{h:>3}{close}").unwrap();
            } else {
                write!(out, "{open}  {close}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn svg(
    diagram: &YoungDiagram,
    show_hooks: bool,
    marked: &HashSet<(usize, usize)>,
    cell: u32,
) -> String {
    let hooks = hook_grid(diagram);
    let width = diagram.num_columns() as u32 * cell;
    let height = diagram.num_rows() as u32 * cell;
    let font = cell / 2;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for (i, &len) in diagram.rows().iter().enumerate() {
        for j in 0..len as usize {
            let x = j as u32 * cell;
            let y = i as u32 * cell;
            let fill = if marked.contains(&(i, j)) {
                "#f4a261"
            } else {
                "#ffffff"
            };
            writeln!(
                out,
                r##"  <rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="{fill}" stroke="#000000" stroke-width="1"/>"##
            )
            .unwrap();
            if show_hooks {
                let h = hooks.get(i, j).expect("box in diagram");
                let cx = x + cell / 2;
                let cy = y + cell / 2;
                writeln!(
                    out,
                    r#"  <text x="{cx}" y="{cy}" font-family="monospace" font-size="{font}" text-anchor="middle" dominant-baseline="central">{h}</text>"#
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
