public class TextsCheck {
    static int failures = 0;

    static void check(String name, boolean ok) {
        if (!ok) {
            System.out.println("FAIL " + name);
            failures = failures + 1;
        }
    }

    public static void main(String[] args) {
        String[] mixed = {"ab", null, "c"};
        check("len_mixed", Texts.totalLength(mixed) == 3);
        String[] single = {"x"};
        check("len_single", Texts.totalLength(single) == 1);
        String[] none = new String[0];
        check("len_none", Texts.totalLength(none) == 0);
        if (failures > 0) {
            System.exit(1);
        }
    }
}
