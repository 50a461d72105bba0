public class AbsoluteCheck {
    static int failures = 0;

    static void check(String name, boolean ok) {
        if (!ok) {
            System.out.println("FAIL " + name);
            failures = failures + 1;
        }
    }

    public static void main(String[] args) {
        check("abs_negative", Absolute.absValue(-5) == 5);
        check("abs_positive", Absolute.absValue(3) == 3);
        check("abs_zero", Absolute.absValue(0) == 0);
        if (failures > 0) {
            System.exit(1);
        }
    }
}
