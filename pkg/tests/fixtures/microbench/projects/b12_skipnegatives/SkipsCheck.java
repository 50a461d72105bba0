public class SkipsCheck {
    static int failures = 0;

    static void check(String name, boolean ok) {
        if (!ok) {
            System.out.println("FAIL " + name);
            failures = failures + 1;
        }
    }

    public static void main(String[] args) {
        int[] mixed = {2, -3, 4};
        check("skip_mixed", Skips.sumSkipNegatives(mixed) == 6);
        int[] none = new int[0];
        check("skip_none", Skips.sumSkipNegatives(none) == 0);
        int[] neg = {-1};
        check("skip_neg", Skips.sumSkipNegatives(neg) == 0);
        int[] pos = {5};
        check("skip_pos", Skips.sumSkipNegatives(pos) == 5);
        if (failures > 0) {
            System.exit(1);
        }
    }
}
