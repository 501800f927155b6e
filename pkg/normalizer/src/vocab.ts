/** Character vocabulary shared by encoder input and decoder output. */

export const PAD = '␀'; // ␀ visible placeholder, never occurs in IPA text
export const SOS = '␂';
export const EOS = '␃';

export class Vocab {
  readonly chars: string[];
  private readonly index: Map<string, number>;

  constructor(chars: string[]) {
    this.chars = chars;
    this.index = new Map(chars.map((ch, i) => [ch, i]));
    for (const special of [PAD, SOS, EOS]) {
      if (!this.index.has(special)) {
        throw new Error(`vocabulary is missing the ${JSON.stringify(special)} marker`);
      }
    }
  }

  static build(texts: Iterable<string>): Vocab {
    const chars = new Set<string>([PAD, SOS, EOS]);
    for (const text of texts) {
      for (const ch of text) chars.add(ch);
    }
    return new Vocab([...chars].sort());
  }

  get size(): number {
    return this.chars.length;
  }

  get pad(): number {
    return this.index.get(PAD)!;
  }

  get sos(): number {
    return this.index.get(SOS)!;
  }

  get eos(): number {
    return this.index.get(EOS)!;
  }

  encode(text: string): number[] {
    return [...text].map((ch) => {
      const id = this.index.get(ch);
      if (id === undefined) {
        throw new Error(`character ${JSON.stringify(ch)} is not in the vocabulary`);
      }
      return id;
    });
  }

  has(text: string): boolean {
    return [...text].every((ch) => this.index.has(ch));
  }

  decode(ids: number[]): string {
    return ids
      .map((id) => this.chars[id])
      .filter((ch) => ch !== PAD && ch !== SOS && ch !== EOS)
      .join('');
  }

  /** Letters available for synthetic sampling: everything except markers. */
  letters(): string[] {
    return this.chars.filter((ch) => ch !== PAD && ch !== SOS && ch !== EOS);
  }

  toJSON(): { chars: string[] } {
    return { chars: this.chars };
  }

  static fromJSON(data: { chars: string[] }): Vocab {
    return new Vocab(data.chars);
  }
}
