pub mod alpha;
pub mod db;
pub mod diagram;
pub mod families;
pub mod gram;
pub mod laurent;
pub mod linalg;
pub mod quandle;
pub mod quotient;
pub mod report;
pub mod seifert;
pub mod verify;
