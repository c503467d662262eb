"""Registry of the bundled example codes (check matrix + Ω + target distance)."""

from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from ..formats import parse_check_matrix, parse_omega
from ..gf2_linalg import SympVector

DATA_PACKAGE = "quotient_space_codes.data.corpus"


def load_data_file(name: str) -> str:
    """Read a bundled data file by name."""
    return resources.files(DATA_PACKAGE).joinpath(name).read_text(encoding="utf-8")


@dataclass
class CorpusEntry:
    """One bundled (C, Ω, d) instance.

    Attributes:
        name: Unique identifier (e.g., "c83")
        matrix_file: Check-matrix file under the data package
        omega_file: Ω file under the data package
        d: Distance the instance is verified at
        group: Sweep group (e.g., "c8-family")
        description: Parameters the instance is expected to realize
        expect_certified: False for deliberately broken fixtures
        oracle: Whether the sweep runs the state-space oracle on it by default
        tags: Extra labels shown in listings
    """
    name: str
    matrix_file: str
    omega_file: str
    d: int
    group: str
    description: str
    expect_certified: bool = True
    oracle: bool = True
    tags: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.name:
            raise ValueError("Entry name cannot be empty")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        for filename in (self.matrix_file, self.omega_file):
            if not filename:
                raise ValueError(f"Entry '{self.name}' needs both a matrix and an Ω file")

    def load(self) -> tuple[list[SympVector], list[SympVector]]:
        """Parse the check matrix and the Ω representatives."""
        rows = parse_check_matrix(load_data_file(self.matrix_file))
        reps = parse_omega(load_data_file(self.omega_file), rows[0].n)
        return rows, reps

    def to_listing(self) -> str:
        marker = "" if self.expect_certified else " [REJECTED FIXTURE]"
        return f"- {self.name}{marker}: {self.description} (d={self.d}, group {self.group})"


class CorpusRegistry:
    """Central registry of bundled examples."""

    def __init__(self):
        self._entries: dict[str, CorpusEntry] = {}

    def register(self, entry: CorpusEntry) -> None:
        """Register a new entry.

        Raises:
            ValueError: If the name is already registered
        """
        if entry.name in self._entries:
            raise ValueError(f"Entry '{entry.name}' already registered")
        self._entries[entry.name] = entry

    def get(self, name: str) -> Optional[CorpusEntry]:
        return self._entries.get(name)

    def get_all(self) -> dict[str, CorpusEntry]:
        return dict(self._entries)

    def list_names(self) -> list[str]:
        """Names in registration order."""
        return list(self._entries)

    def groups(self) -> list[str]:
        seen: dict[str, None] = {}
        for entry in self._entries.values():
            seen.setdefault(entry.group, None)
        return list(seen)

    def validate_and_filter(self, requested: list[str]) -> tuple[list[str], list[str]]:
        """Split requested names into (valid, invalid); a group name expands to its members."""
        valid: list[str] = []
        invalid: list[str] = []
        for name in requested:
            if name in self._entries:
                valid.append(name)
            elif name in self.groups():
                valid.extend(e.name for e in self._entries.values() if e.group == name)
            else:
                invalid.append(name)
        return valid, invalid

    def create_filtered_registry(self, names: list[str]) -> "CorpusRegistry":
        """New registry holding only the requested entries or groups.

        Raises:
            ValueError: If any requested name is neither an entry nor a group
        """
        valid, invalid = self.validate_and_filter(names)
        if invalid:
            raise ValueError(
                f"Unknown example(s): {invalid}. Available: {self.list_names() + self.groups()}"
            )
        filtered = CorpusRegistry()
        for name in valid:
            if name not in filtered._entries:
                filtered._entries[name] = self._entries[name]
        return filtered

    def to_listing(self) -> str:
        if not self._entries:
            return "No examples registered"
        return "\n".join(entry.to_listing() for entry in self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"CorpusRegistry({', '.join(self.list_names())})"


def bundled_examples() -> CorpusRegistry:
    """Every printed matrix and Ω set, plus the broken Ω_83 fixture."""
    registry = CorpusRegistry()
    for entry in (
        CorpusEntry("c8", "c8.chk", "omega8.om", 3, "c8-family", "((8, 2^3·1, 3)) additive"),
        CorpusEntry("c81", "c81.chk", "omega81.om", 3, "c8-family", "((8, 2^2·2, 3))"),
        CorpusEntry("c82", "c82.chk", "omega82.om", 3, "c8-family", "((8, 2^1·4, 3))"),
        CorpusEntry("c83", "c83.chk", "omega83.om", 3, "c8-family", "((8, 2^0·8, 3)) CWS"),
        CorpusEntry("c12", "c12.chk", "omega12.om", 5, "c12", "((12, 2, 5)) degenerate CWS", oracle=False),
        CorpusEntry("c9", "c9.chk", "omega9.om", 2, "c9", "((9, 2^2·16, 2)) degenerate, USt-strict"),
        CorpusEntry("c7", "c7.chk", "omega7.om", 2, "c7", "[[7, 4, 2]] with d(Ω_7) > d(C_7)"),
        CorpusEntry(
            "c83-wrong",
            "c83.chk",
            "omega83_wrong.om",
            3,
            "fixtures",
            "Ω_83 with a weight-1 representative",
            expect_certified=False,
            tags=["negative"],
        ),
    ):
        registry.register(entry)
    return registry
