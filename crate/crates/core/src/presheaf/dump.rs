use serde::Serialize;

use super::{Shape, TruncatedDiagram};

/// A stable, diffable description of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramDump {
    pub shape: Shape,
    pub rank: usize,
    pub levels: Vec<LevelDump>,
    pub generators: Vec<GeneratorTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDump {
    pub level: usize,
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorTable {
    /// `d{i}@{k}`, `s{i}@{k}` or `flip@{k}`.
    pub generator: String,
    pub from: usize,
    pub to: usize,
    /// Image index of each element of the `from` level.
    pub table: Vec<usize>,
}

impl TruncatedDiagram {
    pub fn dump(&self) -> DiagramDump {
        let levels = (0..=self.rank())
            .map(|k| LevelDump {
                level: k,
                size: self.level_size(k),
                elements: self.labels(k).to_vec(),
            })
            .collect();
        let mut generators = Vec::new();
        for k in 0..=self.rank() {
            for g in self.generators_from(k) {
                generators.push(GeneratorTable {
                    generator: g.to_string(),
                    from: g.from_level(),
                    to: g.to_level(),
                    table: (0..self.level_size(k))
                        .map(|x| self.act_generator(g, x).expect("within truncation"))
                        .collect(),
                });
            }
        }
        DiagramDump {
            shape: self.shape(),
            rank: self.rank(),
            levels,
            generators,
        }
    }
}
