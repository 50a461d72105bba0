public class BoundsCheck {
    static int failures = 0;

    static void check(String name, boolean ok) {
        if (!ok) {
            System.out.println("FAIL " + name);
            failures = failures + 1;
        }
    }

    public static void main(String[] args) {
        check("bounds_low", Bounds.withinBounds(0, 3));
        check("bounds_mid", Bounds.withinBounds(2, 3));
        check("bounds_edge", !Bounds.withinBounds(3, 3));
        check("bounds_negative", !Bounds.withinBounds(-1, 3));
        if (failures > 0) {
            System.exit(1);
        }
    }
}
