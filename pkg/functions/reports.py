from functions.IMPORT import BaseModel, ConfigDict, Field, to_camel


class Report(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)

    def to_json(self):
        return self.model_dump(mode='json', by_alias=True, exclude_none=True)


class CoreReport(Report):
    lambda_: list[int] = Field(alias='lambda')
    e: int
    core: list[int]
    weight: int
    sign: int


class DecompositionEntryReport(Report):
    lambda_: list[int] = Field(alias='lambda')
    mu: list[int]
    e: int
    value: str


class Violation(Report):
    kind: str
    detail: str
    row: list[int] | None = None
    col: list[int] | None = None
    value: str | None = None


class ParityBlockReport(Report):
    e: int
    core: list[int]
    weight: int
    entries: int
    violations: list[Violation] = []
    passed: bool = Field(alias='pass')


class ParityIdentityReport(Report):
    lambda_: list[int] = Field(alias='lambda')
    e: int
    n: int
    lhs_parity: int
    rhs_parity: int
    weight: int
    core_length: int
    sign: int
    passed: bool = Field(alias='pass')


class HookMoveReport(Report):
    lambda_: list[int] = Field(alias='lambda')
    e: int
    n: int
    a: list[int]
    a_prime: list[int]
    r: int
    s: int
    u: int
    length: int
    length_prime: int
    checks: dict[str, bool]
    passed: bool = Field(alias='pass')


class MullineuxReport(Report):
    lambda_: list[int] = Field(alias='lambda')
    e: int
    image: list[int]
    weight: int
    checks: dict[str, bool]
    passed: bool = Field(alias='pass')


class CaseCheck(Report):
    lambda_: list[int] = Field(alias='lambda')
    tilde: list[int]
    case: str
    tuple_: list[str] = Field(alias='tuple')
    matched_row: int | None = None
    induction_holds: bool | None = None
    passed: bool = Field(alias='pass')


class E2TableReport(Report):
    pair: dict
    table: list[list[str]] = []
    mismatches: list[str] = []
    passed: bool = Field(alias='pass')


class CaseTableReport(Report):
    pair: dict
    case_checks: list[CaseCheck] = []
    passed: bool = Field(alias='pass')


class PairReport(Report):
    pair: dict
    table: list[list[str]] = []
    mismatches: list[str] = []
    case_checks: list[CaseCheck] = []
    checks: dict[str, bool] = {}
    passed: bool = Field(alias='pass')


class SweepReport(Report):
    suite: str
    e: list[int]
    bounds: dict
    checked: int
    violations: list[dict] = []
    passed: bool = Field(alias='pass')


class CommandReport(Report):
    command: str
    inputs: dict
    result: dict | list | str | int | None = None
    passed: bool | None = Field(default=None, alias='pass')
    elapsed_ms: float | None = None
