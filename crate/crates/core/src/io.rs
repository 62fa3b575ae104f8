//! Genome text format, run logs and frame export.
//!
//! Genome files are line oriented:
//!
//! ```text
//! # connected genome          # coordinate genome
//! start 0 1                   coordinate
//! N F                         cell 0 12
//! NE B                        cell -1 12
//! ...                         ...
//! ```
//!
//! The header decides the kind: `start x y` opens a connected genome,
//! `coordinate` (or a bare `cell x y` line) a coordinate genome. Blank
//! lines and `#` comments are ignored. Print-then-parse is the identity.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::genome::{ChainEnd, ConnectedGenome, CoordinateGenome, Genome};
use crate::grid::{Cell, Direction8, Frame};
use crate::render::{ascii_frame, svg_frame, Viewport};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty genome file")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn print_genome(genome: &Genome) -> String {
    let mut out = String::new();
    match genome {
        Genome::Connected(g) => {
            out.push_str(&format!("start {} {}\n", g.start.x, g.start.y));
            for (dir, end) in &g.sequence {
                let e = match end {
                    ChainEnd::Front => "F",
                    ChainEnd::Back => "B",
                };
                out.push_str(&format!("{} {}\n", dir.name(), e));
            }
        }
        Genome::Coordinate(g) => {
            out.push_str("coordinate\n");
            for cell in &g.cells {
                out.push_str(&format!("cell {} {}\n", cell.x, cell.y));
            }
        }
    }
    out
}

pub fn parse_genome(text: &str) -> Result<Genome, IoError> {
    let mut connected: Option<ConnectedGenome> = None;
    let mut coordinate: Vec<Cell> = Vec::new();
    let mut saw_cell = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let parse_xy = |parts: &[&str]| -> Result<Cell, IoError> {
            if parts.len() != 3 {
                return Err(IoError::Parse {
                    line: line_no,
                    message: format!("expected `{} x y`", parts.first().unwrap_or(&"")),
                });
            }
            let x = parts[1].parse().map_err(|e| IoError::Parse { line: line_no, message: format!("bad x: {e}") })?;
            let y = parts[2].parse().map_err(|e| IoError::Parse { line: line_no, message: format!("bad y: {e}") })?;
            Ok(Cell::new(x, y))
        };

        match parts[0] {
            "start" => {
                if connected.is_some() || saw_cell {
                    return Err(IoError::Parse { line: line_no, message: "unexpected second header".into() });
                }
                connected = Some(ConnectedGenome { start: parse_xy(&parts)?, sequence: Vec::new() });
            }
            "coordinate" => {
                if connected.is_some() {
                    return Err(IoError::Parse { line: line_no, message: "`coordinate` inside a connected genome".into() });
                }
                saw_cell = true;
            }
            "cell" => {
                if connected.is_some() {
                    return Err(IoError::Parse { line: line_no, message: "`cell` inside a connected genome".into() });
                }
                saw_cell = true;
                coordinate.push(parse_xy(&parts)?);
            }
            dir_name => {
                let genome = connected.as_mut().ok_or(IoError::Parse {
                    line: line_no,
                    message: "direction line before `start`".into(),
                })?;
                if parts.len() != 2 {
                    return Err(IoError::Parse { line: line_no, message: "expected `DIR F|B`".into() });
                }
                let dir = Direction8::from_name(dir_name).ok_or(IoError::Parse {
                    line: line_no,
                    message: format!("unknown direction `{dir_name}`"),
                })?;
                let end = match parts[1] {
                    "F" => ChainEnd::Front,
                    "B" => ChainEnd::Back,
                    other => {
                        return Err(IoError::Parse { line: line_no, message: format!("unknown end `{other}`") })
                    }
                };
                genome.sequence.push((dir, end));
            }
        }
    }

    if let Some(g) = connected {
        return Ok(Genome::Connected(g));
    }
    if saw_cell || !coordinate.is_empty() {
        return Ok(Genome::Coordinate(CoordinateGenome::new(coordinate)));
    }
    Err(IoError::Empty)
}

pub fn save_genome(path: &Path, genome: &Genome) -> Result<(), IoError> {
    fs::write(path, print_genome(genome))?;
    Ok(())
}

pub fn load_genome(path: &Path) -> Result<Genome, IoError> {
    parse_genome(&fs::read_to_string(path)?)
}

/// Which frame files to write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderKind {
    None,
    Ascii,
    Svg,
}

/// Write `frame_{t:04}.txt` / `.svg` under `dir`, one per captured frame,
/// all sharing the viewport of the final frame so the animation is stable.
pub fn write_frames(
    dir: &Path,
    frames: &[Frame],
    highway_row: Option<i32>,
    kind: RenderKind,
) -> Result<(), IoError> {
    if kind == RenderKind::None || frames.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    let view = Viewport::around(frames.last().unwrap(), 1, highway_row);
    for frame in frames {
        match kind {
            RenderKind::Ascii => {
                fs::write(dir.join(format!("frame_{:04}.txt", frame.t)), ascii_frame(frame, &view))?
            }
            RenderKind::Svg => {
                fs::write(dir.join(format!("frame_{:04}.svg", frame.t)), svg_frame(frame, &view))?
            }
            RenderKind::None => unreachable!(),
        }
    }
    Ok(())
}

/// Line-delimited JSON writer for run logs.
pub fn write_jsonl<T: serde::Serialize>(path: &Path, records: &[T]) -> Result<(), IoError> {
    let mut file = fs::File::create(path)?;
    for record in records {
        let line = serde_json::to_string(record).expect("record serialization");
        writeln!(file, "{line}")?;
    }
    Ok(())
}

/// `generation,best,mean` summary for a run log.
pub fn write_summary_csv(path: &Path, records: &[crate::evolve::GenerationRecord]) -> Result<(), IoError> {
    let mut out = String::from("generation,best,mean\n");
    for rec in records {
        out.push_str(&format!("{},{},{}\n", rec.generation, rec.best_burning, rec.mean_burning));
    }
    fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::{random_connected, random_coordinate, Window};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = Genome::Connected(random_connected(40, Cell::new(0, 1), &mut rng));
        let text = print_genome(&g);
        assert!(text.starts_with("start 0 1\n"));
        assert_eq!(parse_genome(&text).unwrap(), g);
        assert_eq!(print_genome(&parse_genome(&text).unwrap()), text);
    }

    #[test]
    fn coordinate_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let window = Window::new(Cell::new(-9, -9), Cell::new(9, 9));
        let g = Genome::Coordinate(random_coordinate(25, window, &mut rng));
        let text = print_genome(&g);
        assert_eq!(parse_genome(&text).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_genome("start 0 1\nXX F\n").unwrap_err();
        match err {
            IoError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(parse_genome(""), Err(IoError::Empty)));
        assert!(parse_genome("N F\n").is_err());
        assert!(parse_genome("start 0 1\nstart 2 2\n").is_err());
        assert!(parse_genome("start 0 one\n").is_err());
    }

    #[test]
    fn frames_write_stable_files() {
        let dir = tempfile::tempdir().unwrap();
        let frames = vec![
            Frame { t: 0, burning: vec![(Cell::new(0, 0), 0)], protected: vec![] },
            Frame {
                t: 1,
                burning: vec![(Cell::new(0, 0), 0), (Cell::new(0, 1), 1)],
                protected: vec![(Cell::new(1, 0), 1)],
            },
        ];
        write_frames(dir.path(), &frames, None, RenderKind::Ascii).unwrap();
        let a = fs::read_to_string(dir.path().join("frame_0001.txt")).unwrap();
        write_frames(dir.path(), &frames, None, RenderKind::Ascii).unwrap();
        let b = fs::read_to_string(dir.path().join("frame_0001.txt")).unwrap();
        assert_eq!(a, b);
        write_frames(dir.path(), &frames, None, RenderKind::Svg).unwrap();
        assert!(dir.path().join("frame_0000.svg").exists());
    }
}
