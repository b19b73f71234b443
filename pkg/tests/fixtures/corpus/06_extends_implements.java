public class Both extends Base implements First, Second {
    int value;
}
