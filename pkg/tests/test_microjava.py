from __future__ import annotations

import io

import pytest

from maskrepair.javatool import compile_errors
from maskrepair.microjava import (
    ExitSignal,
    InterpError,
    Interpreter,
    Program,
    jdiv,
    jmod,
    wrap32,
)
from maskrepair.syntax import parse


def run_expr(body: str, *, classes: str = "", max_steps: int = 200_000):
    src = f"class Main {{\n  static int go() {{\n{body}\n  }}\n}}\n{classes}"
    program = Program([parse(src)])
    interp = Interpreter(program, max_steps=max_steps)
    interp.initialize_statics()
    return interp.call_method(program.classes["Main"], "go", [])


def run_main(src: str, main_class: str = "Main", max_steps: int = 200_000):
    program = Program([parse(src)])
    out = io.StringIO()
    interp = Interpreter(program, max_steps=max_steps, stdout=out)
    try:
        code = interp.run_main(main_class)
    except ExitSignal as exc:
        code = exc.code
    return code, out.getvalue()


def test_int_wraparound_matches_java():
    assert wrap32(2**31) == -(2**31)
    assert run_expr("    return 2147483647 + 1;") == -2147483648
    assert run_expr("    return 196608 * 65536;") == 0  # the gcd overflow trigger


def test_division_truncates_toward_zero():
    assert jdiv(-7, 2) == -3
    assert jmod(-7, 2) == -1
    assert run_expr("    return -7 / 2;") == -3
    assert run_expr("    return -7 % 2;") == -1
    with pytest.raises(InterpError):
        run_expr("    return 1 / 0;")


def test_string_and_char_semantics():
    src = """class Main {
  public static void main(String[] args) {
    String s = "abcabc";
    System.out.println(s.indexOf("b"));
    System.out.println(s.lastIndexOf("b"));
    System.out.println(s.charAt(0) == 'a');
    System.out.println(s.charAt(0) != '0');
    System.out.println(s.substring(1, 3));
    System.out.println("n=" + 3);
    System.out.println('a' < 'b');
  }
}
"""
    code, out = run_main(src)
    assert code == 0
    assert out.splitlines() == ["1", "4", "true", "true", "bc", "n=3", "true"]


def test_arrays_and_bounds():
    assert run_expr("    int[] a = new int[3];\n    a[1] = 5;\n    return a[1] + a.length;") == 8
    assert run_expr("    int[] a = {2, 4, 6};\n    return a[2];") == 6
    with pytest.raises(InterpError):
        run_expr("    int[] a = new int[2];\n    return a[5];")
    with pytest.raises(InterpError):
        run_expr("    int[] a = null;\n    return a[0];")


def test_recursion_and_loops():
    src_body = (
        "    int total = 0;\n"
        "    for (int i = 1; i <= 5; i++) {\n"
        "      total += i;\n"
        "    }\n"
        "    return total;"
    )
    assert run_expr(src_body) == 15
    fac = "class Main {\n  static int go() {\n    return fac(5);\n  }\n  static int fac(int n) {\n    if (n <= 1) {\n      return 1;\n    }\n    return n * fac(n - 1);\n  }\n}\n"
    program = Program([parse(fac)])
    interp = Interpreter(program)
    interp.initialize_statics()
    assert interp.call_method(program.classes["Main"], "go", []) == 120


def test_braceless_bodies():
    body = (
        "    int total = 0;\n"
        "    for (int i = 0; i < 3; i++)\n"
        "      while (total < i)\n"
        "        total = total + 1;\n"
        "    if (total == 2)\n"
        "      return 9;\n"
        "    return total;"
    )
    assert run_expr(body) == 9


def test_step_budget_stops_infinite_loops():
    with pytest.raises(InterpError, match="step budget"):
        run_expr("    int i = 0;\n    while (true) {\n      i = i + 1;\n    }\n    return i;", max_steps=5000)


def test_try_catch_is_rejected():
    with pytest.raises(InterpError, match="unsupported statement"):
        run_expr("    try {\n      int x = 1;\n    } catch (Exception e) {\n    }\n    return 0;")


def test_null_guard_skips_cleanly():
    src = """class Main {
  public static void main(String[] args) {
    System.out.println(count(null) + count("abc"));
  }
  static int count(String s) {
    if (s == null) {
      return 0;
    }
    return s.length();
  }
}
"""
    code, out = run_main(src)
    assert code == 0
    assert out == "3\n"


def test_throw_surfaces_as_error():
    with pytest.raises(InterpError, match="IllegalArgumentException"):
        run_expr("    throw new IllegalArgumentException();")


def test_null_dereference_is_an_error():
    with pytest.raises(InterpError, match="null dereference"):
        run_expr('    String s = null;\n    return s.length();')


def test_exit_code_and_static_fields_across_classes():
    src = """class Counter {
  static int hits = 0;
  static void bump() {
    hits = hits + 1;
  }
}
class Main {
  public static void main(String[] args) {
    Counter.bump();
    Counter.bump();
    if (Counter.hits != 2) {
      System.out.println("FAIL hits");
      System.exit(1);
    }
    System.exit(0);
  }
}
"""
    code, out = run_main(src)
    assert code == 0
    assert out == ""


def test_compile_errors_flag_syntax_problems():
    assert compile_errors("class C {\n  void f() {\n    int x = ;\n  }\n}\n")
    assert compile_errors("class C {\n  void f() {\n    g()\n  }\n}\n")  # missing ';'
    assert compile_errors("class C {\n  void f() {\n    if (x) {\n  }\n}\n")  # unbalanced
    assert not compile_errors("class C {\n  void f(int x) {\n    g(x);\n  }\n  void g(int y) {\n  }\n}\n")


def test_compile_rejects_unreachable_code():
    src = "class C {\n  int f() {\n    return 1;\n    int x = 2;\n  }\n}\n"
    problems = compile_errors(src)
    assert any("unreachable" in p for p in problems)
