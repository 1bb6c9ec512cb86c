from enum import StrEnum


class SymmetryMode(StrEnum):
    FUNCTION = "function"  # b_{-n} = (-1)^n conj(b_n), i.e. f o I = conj(f)
    FORM = "form"  # a_{-n} = (-1)^{n+1} conj(a_n), i.e. I^*(phi dz/z) = conj(phi dz/z)


class Representation(StrEnum):
    LAURENT = "laurent"
    ANALYTIC = "analytic"


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"


class ProbeVerdict(StrEnum):
    DIVERGES = "diverges"
    CONVERGES = "converges"
    INCONCLUSIVE = "inconclusive"


class MeshKind(StrEnum):
    FULL = "full"
    QUOTIENT = "quotient"

"""
───────────────────────────────────────────────
English Explanation
───────────────────────────────────────────────
StrEnum members compare equal to their string values, so they can be written
straight into the JSON report and read back from the TOML config:

    Verdict.PASS == "pass"              → True
    SymmetryMode("form")                → SymmetryMode.FORM

───────────────────────────────────────────────
توضیح فارسی
───────────────────────────────────────────────
اعضای StrEnum هم مانند رشته رفتار می‌کنند و هم مقدار ثابت هستند؛
به همین دلیل می‌توان آن‌ها را مستقیم در گزارش جی‌سان نوشت و از فایل پیکربندی خواند،
بدون اینکه در نام حالت‌ها (تقارن تابع یا تقارن فرم، قبول یا رد) اشتباه تایپی رخ دهد.
───────────────────────────────────────────────
"""
